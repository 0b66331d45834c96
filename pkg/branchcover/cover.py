"""Dictionary between symmetric curves upstairs and their images on the marked sphere."""
from typing import List

from .braids import chain_twist_word, permutation_of
from .errors import GenusMismatch
from .models import BraidWord, Classification, CycleKind, FramingLift, SymmetricCycle


def classify_cycle(cycle: SymmetricCycle) -> Classification:
    """
    Downstairs shape of a symmetric vanishing cycle.

    A nonseparating cycle projects to an arc whose endpoints are the images of
    {i, i+1} under the conjugator's permutation; a separating cycle of genus g
    projects to a loop around the images of {1..2g+1}.
    """
    perm = permutation_of(cycle.conjugator)
    if cycle.is_separating:
        enclosed = tuple(sorted(perm[k - 1] for k in range(1, 2 * cycle.index + 2)))
        return Classification(kind=CycleKind.SEPARATING, enclosed=enclosed)
    i = cycle.index
    endpoints = tuple(sorted((perm[i - 1], perm[i])))
    return Classification(kind=CycleKind.ARC, endpoints=endpoints)


def standard_twist(cycle: SymmetricCycle) -> BraidWord:
    """Image of the unconjugated twist: σ_i, or Δ⁴ = (σ1···σ_2g)^(2(2g+1)) on strands 1..2g+1."""
    strands = cycle.conjugator.strands
    if cycle.is_separating:
        g = cycle.index
        return chain_twist_word(strands, 2 * g, 2 * (2 * g + 1))
    return BraidWord.positive(strands, [cycle.index])


def project_twist(cycle: SymmetricCycle) -> BraidWord:
    """Downstairs braid of the Dehn twist about a symmetric cycle."""
    return standard_twist(cycle).conjugate(cycle.conjugator)


def project_word(cycles: List[SymmetricCycle], strands: int) -> BraidWord:
    word = BraidWord.identity(strands)
    return word.concat(*(project_twist(c) for c in cycles))


def lift_framing(f: int, m: int) -> int:
    """Framing of each lift of an f-framed curve whose two lifts link m times."""
    return f - m


def framing_lift(f: int, m: int) -> FramingLift:
    return FramingLift(base_framing=f, mutual_linking=m, lifted_framing=lift_framing(f, m))


def _shift_arc(strands: int, i: int, j: int) -> BraidWord:
    """A braid u with u σ_i u⁻¹ = σ_j."""
    letters = []
    if j >= i:
        for k in range(i, j):
            letters = [(k, 1), (k + 1, 1)] + letters
        return BraidWord(strands=strands, letters=tuple(letters))
    return _shift_arc(strands, j, i).inverse()


def transport(c1: SymmetricCycle, c2: SymmetricCycle) -> BraidWord:
    """
    Braid carrying the downstairs curve of c1 onto that of c2.

    Raises:
        GenusMismatch: The cycles are of different type or genus
    """
    k1, k2 = classify_cycle(c1), classify_cycle(c2)
    if k1.kind != k2.kind or k1.genus != k2.genus:
        raise GenusMismatch(
            f"cannot transport a {k1.kind.value} cycle of genus {k1.genus} "
            f"to a {k2.kind.value} cycle of genus {k2.genus}"
        )
    strands = c1.conjugator.strands
    middle = BraidWord.identity(strands)
    if not c1.is_separating:
        middle = _shift_arc(strands, c1.index, c2.index)
    return c2.conjugator.concat(middle, c1.conjugator.inverse()).reduce()
