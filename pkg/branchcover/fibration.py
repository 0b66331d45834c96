from typing import List

from .models import Base, FibrationSpec, HandleSummary, SymmetricCycle, ValidationReport


def validate(spec: FibrationSpec) -> ValidationReport:
    """
    Check every cycle of a fibration against the bounds set by its genus.

    Args:
        spec: The fibration to check

    Returns:
        ValidationReport: Violated bounds, plus notes for separating genera
        that are not in canonical form min(g, h-g)
    """
    h = spec.genus
    violations: List[str] = []
    notes: List[str] = []
    for position, cycle in enumerate(spec.word, start=1):
        if cycle.conjugator.strands != spec.strands:
            violations.append(
                f"cycle {position}: conjugator on {cycle.conjugator.strands} strands, "
                f"expected 2h+2={spec.strands}"
            )
        if cycle.is_separating:
            g = cycle.index
            if g < 1:
                violations.append(f"cycle {position}: separating genus {g} < 1")
            elif g > h - 1:
                violations.append(f"cycle {position}: separating genus {g} > h-1={h - 1}")
            elif min(g, h - g) != g:
                notes.append(f"cycle {position}: separating genus {g} canonicalized to {h - g}")
        else:
            i = cycle.index
            if i < 1:
                violations.append(f"cycle {position}: arc index {i} < 1")
            elif i > 2 * h + 1:
                violations.append(f"cycle {position}: arc index {i} > 2h+1={2 * h + 1}")
    return ValidationReport(violations=tuple(violations), notes=tuple(notes))


def canonicalize(spec: FibrationSpec) -> FibrationSpec:
    """Replace every separating genus g by min(g, h-g)."""
    h = spec.genus
    word = []
    for cycle in spec.word:
        if cycle.is_separating and 1 <= cycle.index <= h - 1:
            cycle = SymmetricCycle(
                kind=cycle.kind, index=min(cycle.index, h - cycle.index), conjugator=cycle.conjugator
            )
        word.append(cycle)
    return spec.replace_word(word)


def handle_summary(spec: FibrationSpec) -> HandleSummary:
    """Handle counts and Euler characteristics of the total space."""
    h = spec.genus
    chi_m0 = (2 - 2 * h) + spec.mu
    chi_m = chi_m0 + (2 - 2 * h) if spec.base == Base.SPHERE else None
    return HandleSummary(
        one_handles_upstairs=2 * h,
        two_handles=spec.mu,
        chi_m0=chi_m0,
        chi_m=chi_m,
    )
