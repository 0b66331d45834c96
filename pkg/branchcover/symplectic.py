"""Homology shadows on H₁(Σ_h) in the basis a_1..a_h, b_1..b_h.

The half twist σ_j lifts to the Dehn twist about the chain curve c_j; on
homology that is the transvection x -> x + <x, c_j> c_j.
"""
from functools import lru_cache
from typing import List, Sequence, Union

from sympy import ImmutableMatrix, eye, zeros

from .models import BraidWord, SymmetricCycle, SymplecticValue


@lru_cache(maxsize=None)
def symplectic_form(h: int) -> ImmutableMatrix:
    J = zeros(2 * h, 2 * h)
    for i in range(h):
        J[i, h + i] = 1
        J[h + i, i] = -1
    return ImmutableMatrix(J)


@lru_cache(maxsize=None)
def chain_classes(h: int) -> tuple:
    """Classes of the standard chain c_1..c_(2h+1): b1, a1, b1-b2, a2, ..., a_h, b_h."""
    def unit(k: int) -> List[int]:
        v = [0] * (2 * h)
        v[k] = 1
        return v

    a = [unit(i) for i in range(h)]
    b = [unit(h + i) for i in range(h)]
    classes = [b[0]]
    for k in range(h):
        classes.append(a[k])
        if k + 1 < h:
            classes.append([x - y for x, y in zip(b[k], b[k + 1])])
    classes.append(b[h - 1])
    return tuple(ImmutableMatrix(c) for c in classes)


def intersection(x: ImmutableMatrix, y: ImmutableMatrix, h: int) -> int:
    return int((x.T * symplectic_form(h) * y)[0, 0])


@lru_cache(maxsize=None)
def transvection(h: int, j: int, sign: int = 1) -> ImmutableMatrix:
    """Matrix of the (sign = -1: inverse) Dehn twist about c_j on H₁."""
    c = chain_classes(h)[j - 1]
    J = symplectic_form(h)
    return ImmutableMatrix(eye(2 * h) - sign * c * c.T * J)


def symplectic_of_braid(word: BraidWord, h: int) -> ImmutableMatrix:
    """Product, in word order, of the transvections lifting each letter."""
    result = eye(2 * h)
    for index, sign in word.letters:
        result = result * transvection(h, index, sign)
    return ImmutableMatrix(result)


def symplectic_of_cycle(cycle: SymmetricCycle, h: int) -> ImmutableMatrix:
    if cycle.is_separating:
        return ImmutableMatrix(eye(2 * h))
    w = symplectic_of_braid(cycle.conjugator, h)
    w_inv = symplectic_of_braid(cycle.conjugator.inverse(), h)
    return ImmutableMatrix(w * transvection(h, cycle.index) * w_inv)


def symplectic_of(
    item: Union[SymmetricCycle, Sequence[SymmetricCycle], BraidWord], h: int
) -> ImmutableMatrix:
    """
    Symplectic shadow of a cycle, of a word of cycles, or of a downstairs braid.

    Args:
        item: A SymmetricCycle, a sequence of them (product in word order) or a BraidWord
        h: Genus of the fiber

    Returns:
        ImmutableMatrix: Exact 2h×2h integer matrix M with MᵀJM = J
    """
    if isinstance(item, SymmetricCycle):
        return symplectic_of_cycle(item, h)
    if isinstance(item, BraidWord):
        return symplectic_of_braid(item, h)
    result = eye(2 * h)
    for cycle in item:
        result = result * symplectic_of_cycle(cycle, h)
    return ImmutableMatrix(result)


def is_symplectic(M: ImmutableMatrix, h: int) -> bool:
    J = symplectic_form(h)
    return M.T * J * M == J


def classify_matrix(M: ImmutableMatrix, h: int) -> SymplecticValue:
    identity = ImmutableMatrix(eye(2 * h))
    if M == identity:
        return SymplecticValue.PLUS_I
    if M == -identity:
        return SymplecticValue.MINUS_I
    return SymplecticValue.OTHER


def lift_class(cycle: SymmetricCycle, h: int) -> ImmutableMatrix:
    """Homology class of the lifted curve (zero for separating cycles), up to sign."""
    if cycle.is_separating:
        return ImmutableMatrix(zeros(2 * h, 1))
    return ImmutableMatrix(symplectic_of_braid(cycle.conjugator, h) * chain_classes(h)[cycle.index - 1])
