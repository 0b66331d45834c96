import pytest

from branchcover.dsl import parse_fibration

MATSUMOTO_BLOCK = "a3, conj(a3; t2 t4 t1 t5), conj(a3; t2 t4 t1 t5 t2 t4), s1"
FLIPPED_BLOCK = (
    "conj(a3; t3), conj(a3; t3 t2 t4 t1 t5), conj(a3; t3 t2 t4 t1 t5 t2 t4), conj(s1; t3)"
)

MATSUMOTO = f"genus 2; base sphere; word = [{MATSUMOTO_BLOCK}, {MATSUMOTO_BLOCK}]"
EXTENDED = (
    f"genus 2; base sphere; word = "
    f"[{MATSUMOTO_BLOCK}, {MATSUMOTO_BLOCK}, {FLIPPED_BLOCK}, {FLIPPED_BLOCK}]"
)


def arcs(indices):
    return ", ".join(f"a{i}" for i in indices)


def nonseparating(genus, indices, base="sphere"):
    return f"genus {genus}; base {base}; word = [{arcs(indices)}]"


# (a1..a5 a5..a1)^2: the hyperelliptic relation squared
HYPERELLIPTIC_SQUARED = nonseparating(2, [1, 2, 3, 4, 5, 5, 4, 3, 2, 1] * 2)
# (a1..a5)^6: the chain relation
CHAIN_SIX = nonseparating(2, [1, 2, 3, 4, 5] * 6)


@pytest.fixture
def matsumoto():
    """Genus-2 fibration with six nonseparating and two separating singular fibers."""
    return parse_fibration(MATSUMOTO)


@pytest.fixture
def extended():
    """Matsumoto's word followed by its conjugate under the half twist t3."""
    return parse_fibration(EXTENDED)
