import random

import pytest

from branchcover.braids import prove_relation
from branchcover.cover import project_word
from branchcover.dsl import parse_fibration
from branchcover.errors import NonIntegral, NotAChainBlock, NotSeparating, ParityError, RangeError
from branchcover.invariants import (
    compare_deformation_resolution,
    deform_all,
    deform_cycle,
    euler_branch,
    euler_total,
    milnor_data,
    resolution_data,
    resolution_summary,
    resolve_block,
    satisfies_b2_bound,
    signature_endo,
    singularity_profile,
    trade_euler_delta,
)
from branchcover.mcg import certify_global_monodromy, is_trivial_downstairs
from branchcover.models import BraidWord, CycleKind, FibrationSpec, SymmetricCycle
from branchcover.symplectic import symplectic_of


@pytest.mark.parametrize(
    "h, mu_ns, sigma, expected",
    [(2, 6, 2, 10), (2, 12, 4, 8), (2, 20, 0, -8), (1, 12, 0, -4)],
)
def test_euler_branch(h, mu_ns, sigma, expected):
    """Test χ(branch) = 4h + 4 − μ_ns + 2σ."""
    assert euler_branch(h, mu_ns, sigma) == expected


def test_euler_total():
    """Test χ(M) = 2(2 − 2h) + μ."""
    assert euler_total(2, 8) == 4
    assert euler_total(2, 16) == 12


@pytest.mark.parametrize(
    "h, n_ns, counts, expected",
    [(2, 6, {1: 2}, -4), (2, 12, {1: 4}, -8), (2, 20, {}, -12), (1, 12, {}, -8), (2, 0, {}, 0)],
)
def test_signature_endo(h, n_ns, counts, expected):
    """Test the signature formula for hyperelliptic fibrations."""
    assert signature_endo(h, n_ns, counts) == expected


def test_signature_endo_non_integral():
    """Test that counts which cannot come from a fibration are rejected."""
    with pytest.raises(NonIntegral):
        signature_endo(2, 1, {})


def test_b2_bound():
    """Test |σ| ≤ χ − 2."""
    assert satisfies_b2_bound(4, -2)
    assert not satisfies_b2_bound(4, -4)


@pytest.mark.parametrize("n, spheres, chi_cover", [(1, 0, 1), (3, 10, 11), (5, 36, 37)])
def test_milnor_data(n, spheres, chi_cover):
    """Test the Milnor fiber data and its double cover."""
    data = milnor_data(n)
    assert data.sphere_count == spheres
    assert data.chi_cover == chi_cover
    assert data.chi_fiber == 1 - spheres


@pytest.mark.parametrize("n", [0, 2, 4, -3])
def test_milnor_data_needs_odd_n(n):
    """Test that even or non-positive n are refused."""
    with pytest.raises(ParityError):
        milnor_data(n)


def test_resolution_data():
    """Test the Euler characteristics around the resolution of a genus-1 point."""
    data = resolution_data(1)
    assert data.chi_before == 1
    assert data.chi_after == 0
    assert data.genus_g_surface_square == -2
    assert data.sphere_square == -1
    with pytest.raises(RangeError):
        resolution_data(-1)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_trade_euler_delta(g):
    """Test that the trade gains 4g(2g+1) − 1."""
    assert trade_euler_delta(g) == 4 * g * (2 * g + 1) - 1


@pytest.mark.parametrize("g", [1, 2, 3])
def test_deformation_and_resolution_differ(g):
    """Test that the Milnor fiber cover and the resolution never share χ."""
    comparison = compare_deformation_resolution(g)
    assert not comparison.coincide
    assert comparison.milnor.n == 2 * g + 1


@pytest.mark.parametrize(
    "text, length",
    [
        ("genus 2; base sphere; word = [s1]", 12),
        ("genus 3; base sphere; word = [a1, s1, a2]", 12),
        ("genus 2; base sphere; word = [conj(s1; t3 t2')]", 12),
        ("genus 4; base disk; word = [s2]", 40),
    ],
)
def test_deform_then_resolve_round_trip(text, length):
    """Test that resolving a freshly deformed block restores the word."""
    spec = parse_fibration(text)
    index = next(i for i, c in enumerate(spec.word) if c.is_separating)
    deformed = deform_cycle(spec, index)
    assert deformed.mu == spec.mu - 1 + length
    assert deformed.sigma == spec.sigma - 1
    block = deformed.word[index:index + length]
    assert all(c.conjugator == spec.word[index].conjugator for c in block)
    assert resolve_block(deformed, index, index + length) == spec


@pytest.mark.parametrize("index", [-1, -8, 8, 20])
def test_deform_rejects_positions_outside_the_word(matsumoto, index):
    """Test that negative and overlong positions are range errors."""
    with pytest.raises(RangeError):
        deform_cycle(matsumoto, index)


@pytest.mark.parametrize("start, stop", [(-12, 0), (-1, 3), (0, 9)])
def test_resolve_rejects_ranges_outside_the_word(matsumoto, start, stop):
    """Test that ranges reaching past either end are range errors."""
    with pytest.raises(RangeError):
        resolve_block(matsumoto, start, stop)


def test_deform_needs_a_separating_cycle(matsumoto):
    """Test that arcs cannot be deformed."""
    with pytest.raises(NotSeparating):
        deform_cycle(matsumoto, 0)


@pytest.mark.parametrize(
    "text, start, stop",
    [
        ("genus 2; base sphere; word = [a1, a2]", 0, 2),
        ("genus 2; base sphere; word = [a3, s1]", 0, 2),
        ("genus 2; base sphere; word = [a1, conj(a2; t4)]", 0, 2),
        ("genus 2; base sphere; word = [a1]", 1, 1),
    ],
)
def test_resolve_rejects_non_blocks(text, start, stop):
    """Test the shapes that are not chain blocks."""
    with pytest.raises(NotAChainBlock):
        resolve_block(parse_fibration(text), start, stop)


def test_resolve_rejects_wrong_product():
    """Test that twelve letters of the wrong pattern are not a chain block."""
    spec = parse_fibration("genus 2; base sphere; word = [" + ", ".join(["a1", "a3"] * 6) + "]")
    with pytest.raises(NotAChainBlock):
        resolve_block(spec, 0, 12)


def test_deform_all(matsumoto):
    """Test that deforming every separating cycle keeps the monodromy certified."""
    deformed = deform_all(matsumoto)
    assert deformed.sigma == 0
    assert deformed.mu == 30
    assert certify_global_monodromy(deformed).certified


def test_singularity_profile(matsumoto):
    """Test one triple point per separating cycle of genus 1."""
    profile = singularity_profile(matsumoto)
    assert [s.cycle_index for s in profile] == [3, 7]
    assert all(s.g == 1 and s.n == 3 for s in profile)


def test_resolution_summary(matsumoto):
    """Test that the Euler characteristic grows by the trade of every singular point."""
    summary = resolution_summary(matsumoto)
    assert summary == {
        "singular_points": 2,
        "mu_before": 8,
        "mu_after": 30,
        "chi_before": 4,
        "chi_after": 26,
        "euler_trade": 22,
    }
    assert summary["chi_after"] - summary["chi_before"] == summary["euler_trade"]


def _random_braid(rng, strands, max_length):
    return BraidWord(
        strands=strands,
        letters=tuple(
            (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, max_length))
        ),
    )


def _shadows(spec):
    downstairs = project_word(list(spec.word), spec.strands)
    return downstairs, is_trivial_downstairs(downstairs), symplectic_of(list(spec.word), spec.genus)


def test_rewriting_preserves_monodromy_in_genus_three():
    """Test that deforming and resolving keep the downstairs braid and the symplectic product."""
    rng = random.Random(31)
    for _ in range(10):
        strands = 8
        word = [
            SymmetricCycle(kind=CycleKind.ARC, index=rng.randint(1, 7), conjugator=_random_braid(rng, strands, 3))
            for _ in range(rng.randint(1, 3))
        ]
        index = rng.randint(0, len(word))
        word.insert(
            index,
            SymmetricCycle(kind=CycleKind.SEPARATING, index=1, conjugator=_random_braid(rng, strands, 3)),
        )
        spec = FibrationSpec(genus=3, word=tuple(word))
        braid, trivial, shadow = _shadows(spec)

        deformed = deform_cycle(spec, index)
        deformed_braid, deformed_trivial, deformed_shadow = _shadows(deformed)
        assert prove_relation(braid, deformed_braid)
        assert deformed_trivial == trivial
        assert deformed_shadow == shadow

        resolved = resolve_block(deformed, index, index + 12)
        assert resolved == spec


def test_rewriting_conjugated_matsumoto_keeps_it_certified(matsumoto):
    """Test rewriting a globally conjugated certified word of separating genus 1."""
    rng = random.Random(8)
    for _ in range(3):
        w = _random_braid(rng, matsumoto.strands, 4)
        spec = matsumoto.replace_word(tuple(c.conjugated(w) for c in matsumoto.word))
        _, trivial, shadow = _shadows(spec)
        assert trivial

        deformed = deform_cycle(spec, 3)
        _, deformed_trivial, deformed_shadow = _shadows(deformed)
        assert deformed_trivial
        assert deformed_shadow == shadow
        assert certify_global_monodromy(deformed).certified
        assert resolve_block(deformed, 3, 15) == spec
