"""Braid words, their permutations, and the left Garside normal form.

A simple (positive permutation) braid on n strands is stored as a tuple p with
p[x] = final position of the strand that starts at position x (0-based). The
product "a then b" of simple braids is x -> b[a[x]].

A braid is put in the form Δ^power · s_1 ··· s_k with every s_j a proper
simple braid and every pair (s_j, s_j+1) left-weighted, i.e. the starting set
of s_j+1 is contained in the finishing set of s_j. That form is unique, so two
words are equal in the braid group iff their forms agree.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .config import settings
from .errors import RangeError
from .models import BraidWord

Perm = Tuple[int, ...]


def permutation_of(word: BraidWord) -> Tuple[int, ...]:
    """
    Permutation of the marked points induced by a braid word.

    Letters act left to right; σ_i (either sign) swaps points i and i+1.

    Returns:
        tuple: perm[k-1] is the image of point k (1-based)
    """
    position = list(range(1, word.strands + 1))
    where = {k: k for k in position}
    for index, _ in word.letters:
        for k, p in where.items():
            if p == index:
                where[k] = index + 1
            elif p == index + 1:
                where[k] = index
    return tuple(where[k] for k in position)


def compose_permutations(first: Sequence[int], second: Sequence[int]) -> Tuple[int, ...]:
    """Apply `first`, then `second` (both 1-based image tuples)."""
    return tuple(second[first[k] - 1] for k in range(len(first)))


def is_identity_permutation(perm: Sequence[int]) -> bool:
    return all(image == k for k, image in enumerate(perm, start=1))


def delta_word(strands: int) -> BraidWord:
    """Positive word for the half twist Δ = σ1 (σ2 σ1) (σ3 σ2 σ1) ···."""
    indices: List[int] = []
    for top in range(1, strands):
        indices.extend(range(top, 0, -1))
    return BraidWord.positive(strands, indices)


def chain_twist_word(strands: int, k: int, power: int) -> BraidWord:
    """(σ1 ··· σ_k)^power on `strands` strands."""
    return BraidWord.positive(strands, list(range(1, k + 1)) * power)


def full_twist_on_first(strands: int, m: int, times: int = 1) -> BraidWord:
    """Δ² on the first m strands, `times` times: (σ1 ··· σ_(m-1))^(m·times)."""
    return chain_twist_word(strands, m - 1, m * times)


# -- simple braids -----------------------------------------------------------

def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(n - 1 - x for x in range(n))


def _swap_values(p: Perm, i: int) -> Perm:
    """p · σ_i: exchange the values i-1 and i."""
    lo, hi = i - 1, i
    return tuple(hi if v == lo else lo if v == hi else v for v in p)


def _swap_entries(p: Perm, i: int) -> Perm:
    """σ_i⁻¹ · p: exchange the entries at positions i-1 and i."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def _tau(p: Perm) -> Perm:
    """Δ · p · Δ⁻¹."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


def _starting_set(p: Perm) -> List[int]:
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def _finishing_set(p: Perm) -> set:
    inv = _inverse(p)
    return {i for i in range(1, len(p)) if inv[i - 1] > inv[i]}


def _left_weight(a: Perm, b: Perm) -> Tuple[Perm, Perm]:
    """Move crossings from b into a until (a, b) is left-weighted."""
    while True:
        finishing = _finishing_set(a)
        movable = [i for i in _starting_set(b) if i not in finishing]
        if not movable:
            return a, b
        i = movable[0]
        a = _swap_values(a, i)
        b = _swap_entries(b, i)


def simple_word(p: Perm) -> List[int]:
    """A positive word (generator indices) for a simple braid."""
    indices: List[int] = []
    while True:
        starting = _starting_set(p)
        if not starting:
            return indices
        i = starting[0]
        indices.append(i)
        p = _swap_entries(p, i)


@dataclass(frozen=True)
class GarsideForm:
    """Left normal form Δ^power · factors[0] ··· factors[-1]."""
    strands: int
    power: int
    factors: Tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        n = self.strands
        letters: List[Tuple[int, int]] = []
        delta = delta_word(n)
        if self.power >= 0:
            letters.extend(delta.letters * self.power)
        else:
            letters.extend(delta.inverse().letters * (-self.power))
        for factor in self.factors:
            letters.extend((i, 1) for i in simple_word(factor))
        return BraidWord(strands=n, letters=tuple(letters))


def _normalise(n: int, factors: List[Perm]) -> Tuple[int, Tuple[Perm, ...]]:
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b = _left_weight(factors[j], factors[j + 1])
            if (a, b) != (factors[j], factors[j + 1]):
                factors[j], factors[j + 1] = a, b
                changed = True
    delta, identity = _delta(n), _identity(n)
    left, right = 0, len(factors)
    while left < right and factors[left] == delta:
        left += 1
    while left < right and factors[right - 1] == identity:
        right -= 1
    return left, tuple(factors[left:right])


def garside_form(word: BraidWord) -> GarsideForm:
    """
    Compute the left Garside normal form of a braid word.

    Raises:
        RangeError: More strands than settings.MAX_STRANDS
    """
    n = word.strands
    if n > settings.MAX_STRANDS:
        raise RangeError(f"{n} strands exceeds MAX_STRANDS={settings.MAX_STRANDS}")
    if n == 1:
        return GarsideForm(strands=1, power=0, factors=())

    # σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹); every Δ⁻¹ is pulled to the front through τ.
    factors: List[Perm] = []
    power = 0
    delta = _delta(n)
    for index, sign in word.letters:
        if sign > 0:
            factors.append(_swap_entries(_identity(n), index))
        else:
            factors = [_tau(f) for f in factors]
            power -= 1
            factors.append(_swap_values(delta, index))

    extra, normal = _normalise(n, factors)
    return GarsideForm(strands=n, power=power + extra, factors=normal)


def normal_form(word: BraidWord) -> BraidWord:
    """Canonical representative: equal braids give identical words."""
    return garside_form(word).to_word()


def prove_relation(lhs: BraidWord, rhs: BraidWord) -> bool:
    """Decide whether two words are equal in the braid group."""
    if lhs.strands != rhs.strands:
        raise ValueError(f"braids on {lhs.strands} and {rhs.strands} strands cannot be compared")
    return garside_form(lhs) == garside_form(rhs)


def is_trivial_braid(word: BraidWord) -> bool:
    form = garside_form(word)
    return form.power == 0 and not form.factors
