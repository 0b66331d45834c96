"""Exact mapping-class computations on the sphere with 2h+2 marked points.

Braids act on the free group <x_1, ..., x_n> (n = 2h+2) by the Hurwitz action
σ_i: (x_i, x_(i+1)) -> (x_i x_(i+1) x_i⁻¹, x_i). A braid is trivial in the
mapping class group of the marked sphere iff its permutation is trivial and
the induced automorphism, taken modulo x_1···x_n = 1, is inner.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from sympy.combinatorics.free_groups import FreeGroupElement, free_group

from .braids import is_identity_permutation, permutation_of
from .config import settings
from .cover import project_word
from .errors import RangeError
from .models import BraidWord, FibrationSpec, IdentityCertificate, SymplecticValue
from .symplectic import classify_matrix, symplectic_of
from .utils.logging import logger


@lru_cache(maxsize=None)
def _free_group(n: int):
    F, *gens = free_group(", ".join(f"x{k}" for k in range(1, n + 1)))
    return F, tuple(gens)


@dataclass(frozen=True)
class FreeGroupState:
    """Images of the generators x_1..x_n under a braid automorphism."""
    strands: int
    images: Tuple[FreeGroupElement, ...]

    @classmethod
    def basepoint(cls, strands: int) -> "FreeGroupState":
        _, gens = _free_group(strands)
        return cls(strands=strands, images=gens)

    @property
    def generators(self) -> Tuple[FreeGroupElement, ...]:
        return _free_group(self.strands)[1]

    def product(self) -> FreeGroupElement:
        F, _ = _free_group(self.strands)
        result = F.identity
        for image in self.images:
            result = result * image
        return result


def act_on_state(word: BraidWord, state: FreeGroupState) -> FreeGroupState:
    """Apply the Hurwitz action of a braid word, letter by letter."""
    if word.strands != state.strands:
        raise ValueError(f"braid on {word.strands} strands cannot act on rank {state.strands}")
    images = list(state.images)
    for index, sign in word.letters:
        a, b = images[index - 1], images[index]
        if sign > 0:
            images[index - 1], images[index] = a * b * a**-1, a
        else:
            images[index - 1], images[index] = b, b**-1 * a * b
    return FreeGroupState(strands=state.strands, images=tuple(images))


def sphere_quotient(state: FreeGroupState) -> Tuple[FreeGroupElement, ...]:
    """Images rewritten with x_n = (x_1···x_(n-1))⁻¹, so they live on x_1..x_(n-1)."""
    F, gens = _free_group(state.strands)
    last = gens[-1]
    substitute = F.identity
    for gen in gens[:-1]:
        substitute = substitute * gen
    substitute = substitute**-1
    lookup = {g.array_form[0][0]: g for g in gens}

    def reduce(element: FreeGroupElement) -> FreeGroupElement:
        result = F.identity
        for symbol, exponent in element.array_form:
            gen = lookup[symbol]
            result = result * (substitute if gen == last else gen) ** exponent
        return result

    return tuple(reduce(image) for image in state.images)


def find_conjugator(
    images: Sequence[FreeGroupElement], generators: Sequence[FreeGroupElement]
) -> Optional[FreeGroupElement]:
    """
    Find g with images[i] = g·generators[i]·g⁻¹ for every i, if there is one.

    Only the first len(generators) images are examined.
    """
    x1, x2 = generators[0], generators[1]
    core, outer = images[0].cyclic_reduction(removed=True)
    if core != x1:
        return None
    # g = outer · x1^k for some k; read k off the second generator
    z = outer**-1 * images[1] * outer
    if z == x2:
        k = 0
    else:
        syllables = z.array_form
        s1, s2 = x1.array_form[0][0], x2.array_form[0][0]
        if (
            len(syllables) != 3
            or syllables[0][0] != s1
            or syllables[1] != (s2, 1)
            or syllables[2] != (s1, -syllables[0][1])
        ):
            return None
        k = syllables[0][1]
    g = outer * x1**k
    for image, gen in zip(images, generators):
        if g * gen * g**-1 != image:
            return None
    return g


def action_is_inner(word: BraidWord) -> bool:
    state = act_on_state(word, FreeGroupState.basepoint(word.strands))
    images = sphere_quotient(state)
    generators = state.generators[:-1]
    return find_conjugator(images[:-1], generators) is not None


def is_trivial_downstairs(word: BraidWord) -> bool:
    """Whether a braid is the identity in the mapping class group of the marked sphere."""
    if not is_identity_permutation(permutation_of(word)):
        return False
    return action_is_inner(word)


def certify_global_monodromy(spec: FibrationSpec) -> IdentityCertificate:
    """
    Decide whether the global monodromy of a fibration is the identity upstairs.

    Args:
        spec: A validated fibration (normally over the sphere)

    Returns:
        IdentityCertificate: Permutation, free-group and symplectic evidence and the verdict

    Raises:
        RangeError: The downstairs word is longer than settings.MAX_WORD_LENGTH
    """
    h = spec.genus
    downstairs = project_word(list(spec.word), spec.strands)
    if len(downstairs) > settings.MAX_WORD_LENGTH:
        raise RangeError(
            f"downstairs word has {len(downstairs)} letters, limit is {settings.MAX_WORD_LENGTH}"
        )
    permutation_trivial = is_identity_permutation(permutation_of(downstairs))
    action_inner = permutation_trivial and action_is_inner(downstairs)
    value = classify_matrix(symplectic_of(list(spec.word), h), h)
    certificate = IdentityCertificate.from_checks(permutation_trivial, action_inner, value)
    logger.info(
        f"Certified genus {h} word of length {spec.mu}: {certificate.verdict.value} "
        f"(permutation {permutation_trivial}, inner {action_inner}, symplectic {value.value})"
    )
    return certificate


def symplectic_value(spec: FibrationSpec) -> SymplecticValue:
    return classify_matrix(symplectic_of(list(spec.word), spec.genus), spec.genus)
