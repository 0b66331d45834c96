"""Closed-form invariants, cover identities, and the separating <-> chain rewriters."""
from typing import Dict, List, Mapping

from sympy import Rational

from .braids import chain_twist_word, delta_word, prove_relation
from .cover import standard_twist
from .errors import NonIntegral, NotAChainBlock, NotSeparating, ParityError, RangeError
from .models import (
    BranchedCoverDescription,
    BraidWord,
    CycleKind,
    DefVsRes,
    FibrationSpec,
    MilnorData,
    ResolutionData,
    Singularity,
    SymmetricCycle,
)
from .utils.logging import logger


def euler_total(h: int, mu: int) -> int:
    """χ of the closed total space: two copies of Σ_h×D² plus μ 2-handles."""
    return 2 * (2 - 2 * h) + mu


def euler_branch(h: int, mu_ns: int, sigma: int) -> int:
    return 4 * h + 4 - mu_ns + 2 * sigma


def signature_endo(h: int, n_ns: int, sep_counts: Mapping[int, int]) -> int:
    """
    Signature of a hyperelliptic fibration from its counts of singular fibers.

    Args:
        h: Fiber genus
        n_ns: Number of nonseparating vanishing cycles
        sep_counts: Number of separating vanishing cycles of each genus g

    Raises:
        NonIntegral: The counts do not give an integer, so they cannot come from a fibration
    """
    total = Rational(-(h + 1), 2 * h + 1) * n_ns
    for g, count in sep_counts.items():
        total += (Rational(4 * g * (h - g), 2 * h + 1) - 1) * count
    if not total.is_integer:
        raise NonIntegral(f"signature {total} is not an integer for genus {h}, counts {dict(sep_counts)}")
    return int(total)


def check_cover_identity(d: BranchedCoverDescription) -> bool:
    """2χ(ambient) − χ(branch) = χ(cover)."""
    return 2 * d.ambient.euler - d.chi_branch == d.chi_mprime


def satisfies_b2_bound(chi: int, sigma: int) -> bool:
    """|σ| ≤ b₂ = χ − 2 for a closed 4-manifold with b₁ = 0."""
    return abs(sigma) <= chi - 2


def milnor_data(n: int) -> MilnorData:
    """Milnor fiber data of z^n + w^(2n) = 0 and its double cover; n must be odd."""
    if n < 1 or n % 2 == 0:
        raise ParityError(f"n must be an odd positive integer, got {n}")
    return MilnorData(
        n=n,
        sphere_count=(n - 1) * (2 * n - 1),
        chi_fiber=3 * n - 2 * n * n,
        chi_cover=2 * n * n - 3 * n + 2,
    )


def resolution_data(g: int) -> ResolutionData:
    if g < 0:
        raise RangeError(f"genus must be non-negative, got {g}")
    chi_before = (2 - 2 * g) + 2 - 1
    return ResolutionData(g=g, chi_before=chi_before, chi_after=chi_before - 1)


def trade_euler_delta(g: int) -> int:
    """χ gained by trading a genus-g square −1 neighbourhood for the sphere configuration."""
    return milnor_data(2 * g + 1).chi_cover - resolution_data(g).chi_after


def compare_deformation_resolution(g: int) -> DefVsRes:
    milnor = milnor_data(2 * g + 1)
    resolution = resolution_data(g)
    return DefVsRes(
        milnor=milnor, resolution=resolution, coincide=milnor.chi_cover == resolution.chi_after
    )


def chain_block(g: int, conjugator: BraidWord) -> List[SymmetricCycle]:
    """(a_1, ..., a_2g) repeated 2(2g+1) times, every letter conjugated by `conjugator`."""
    return [
        SymmetricCycle(kind=CycleKind.ARC, index=j, conjugator=conjugator)
        for _ in range(2 * (2 * g + 1))
        for j in range(1, 2 * g + 1)
    ]


def deform_cycle(spec: FibrationSpec, index: int) -> FibrationSpec:
    """
    Replace the separating cycle at `index` (0-based) by its chain block.

    Raises:
        RangeError: `index` is outside the word
        NotSeparating: The cycle at `index` is nonseparating
    """
    if not 0 <= index < spec.mu:
        raise RangeError(f"position {index} outside a word of length {spec.mu}")
    cycle = spec.word[index]
    if not cycle.is_separating:
        raise NotSeparating(f"cycle at position {index} is not separating")
    block = chain_block(cycle.index, cycle.conjugator)
    logger.info(f"Deformed separating cycle {index} (genus {cycle.index}) into {len(block)} cycles")
    return spec.replace_word(spec.word[:index] + tuple(block) + spec.word[index + 1:])


def resolve_block(spec: FibrationSpec, start: int, stop: int) -> FibrationSpec:
    """
    Replace word[start:stop], a uniformly conjugated chain block, by one separating cycle.

    Raises:
        RangeError: The range reaches outside the word
        NotAChainBlock: The block is not conjugated uniformly, contains separating
            cycles, or is not equal to a separating twist in the braid group
    """
    if start < 0 or stop > spec.mu:
        raise RangeError(f"range {start}..{stop} outside a word of length {spec.mu}")
    block = spec.word[start:stop]
    if not block:
        raise NotAChainBlock(f"empty block {start}..{stop}")
    conjugator = block[0].conjugator
    for cycle in block:
        if cycle.is_separating:
            raise NotAChainBlock("a chain block contains only nonseparating cycles")
        if cycle.conjugator != conjugator:
            raise NotAChainBlock("cycles of a chain block must share one conjugator")

    strands = spec.strands
    braid = BraidWord.positive(strands, [c.index for c in block])
    for g in range(1, spec.genus // 2 + 1):
        if braid.exponent_sum() != 4 * g * (2 * g + 1):
            continue
        candidate = SymmetricCycle(
            kind=CycleKind.SEPARATING, index=g, conjugator=BraidWord.identity(strands)
        )
        if prove_relation(braid, standard_twist(candidate)):
            logger.info(f"Resolved block {start}..{stop} into a genus {g} separating cycle")
            return spec.replace_word(
                spec.word[:start] + (candidate.with_conjugator(conjugator),) + spec.word[stop:]
            )
    raise NotAChainBlock(f"block {start}..{stop} is not a chain block of any separating genus")


def deform_all(spec: FibrationSpec) -> FibrationSpec:
    """Deform every separating cycle, leaving a nonseparating-only word."""
    for index in reversed(range(spec.mu)):
        if spec.word[index].is_separating:
            spec = deform_cycle(spec, index)
    return spec


def singularity_profile(spec: FibrationSpec) -> List[Singularity]:
    """The infinitely close (2g+1)-tuple point behind each separating cycle."""
    return [
        Singularity(cycle_index=i, g=c.index, n=2 * c.index + 1)
        for i, c in enumerate(spec.word)
        if c.is_separating
    ]


def chain_relation_holds(g: int) -> bool:
    """(σ1···σ_2g)^(2(2g+1)) = Δ⁴ on 2g+1 strands."""
    n = 2 * g + 1
    lhs = chain_twist_word(n, 2 * g, 2 * (2 * g + 1))
    rhs = delta_word(n).power(4)
    return prove_relation(lhs, rhs)


def resolution_summary(spec: FibrationSpec) -> Dict[str, int]:
    """Euler bookkeeping for deforming every separating cycle at once."""
    deformed = deform_all(spec)
    trade = sum(trade_euler_delta(s.g) for s in singularity_profile(spec))
    return {
        "singular_points": spec.sigma,
        "mu_before": spec.mu,
        "mu_after": deformed.mu,
        "chi_before": euler_total(spec.genus, spec.mu),
        "chi_after": euler_total(spec.genus, deformed.mu),
        "euler_trade": trade,
    }
