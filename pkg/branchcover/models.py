from enum import Enum
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, validator

Letter = Tuple[int, int]


class Frozen(BaseModel):
    class Config:
        frozen = True


class BraidWord(Frozen):
    """Word in the half-twist generators of the braid group on `strands` strands."""
    strands: int
    letters: Tuple[Letter, ...] = ()

    @validator("strands")
    def _positive_strands(cls, v):
        if v < 1:
            raise ValueError("a braid needs at least one strand")
        return v

    @validator("letters")
    def _letters_in_range(cls, v, values):
        n = values.get("strands")
        if n is None:
            return v
        for index, sign in v:
            if not 1 <= index <= n - 1:
                raise ValueError(f"generator {index} out of range for {n} strands")
            if sign not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {sign}")
        return v

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands=strands)

    @classmethod
    def positive(cls, strands: int, indices) -> "BraidWord":
        return cls(strands=strands, letters=tuple((i, 1) for i in indices))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(
            strands=self.strands,
            letters=tuple((i, -s) for i, s in reversed(self.letters)),
        )

    def concat(self, *others: "BraidWord") -> "BraidWord":
        letters = list(self.letters)
        for other in others:
            if other.strands != self.strands:
                raise ValueError(
                    f"cannot concatenate braids on {self.strands} and {other.strands} strands"
                )
            letters.extend(other.letters)
        return BraidWord(strands=self.strands, letters=tuple(letters))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """Return by · self · by⁻¹."""
        return by.concat(self, by.inverse())

    def power(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(strands=self.strands, letters=base.letters * abs(k))

    def reduce(self) -> "BraidWord":
        """Cancel adjacent inverse pairs until none remain."""
        stack = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(strands=self.strands, letters=tuple(stack))

    def exponent_sum(self) -> int:
        return sum(s for _, s in self.letters)


class CycleKind(str, Enum):
    ARC = "arc"
    SEPARATING = "sep"


class SymmetricCycle(Frozen):
    """A symmetric vanishing cycle, encoded downstairs as a conjugated standard generator."""
    kind: CycleKind
    index: int  # arc index i, or the separating genus g
    conjugator: BraidWord

    @property
    def is_separating(self) -> bool:
        return self.kind == CycleKind.SEPARATING

    @property
    def genus(self) -> Optional[int]:
        return self.index if self.is_separating else None

    def conjugated(self, by: BraidWord) -> "SymmetricCycle":
        """conj(conj(c; w); v) = conj(c; v·w)."""
        return SymmetricCycle(
            kind=self.kind, index=self.index, conjugator=by.concat(self.conjugator)
        )

    def with_conjugator(self, conjugator: BraidWord) -> "SymmetricCycle":
        return SymmetricCycle(kind=self.kind, index=self.index, conjugator=conjugator)


class Base(str, Enum):
    DISK = "disk"
    SPHERE = "sphere"


class FibrationSpec(Frozen):
    """Genus, base and ordered vanishing-cycle word of a hyperelliptic Lefschetz fibration."""
    genus: int
    word: Tuple[SymmetricCycle, ...] = ()
    base: Base = Base.SPHERE

    @validator("genus")
    def _genus_positive(cls, v):
        if v < 1:
            raise ValueError("genus must be at least 1")
        return v

    @property
    def strands(self) -> int:
        return 2 * self.genus + 2

    @property
    def mu(self) -> int:
        return len(self.word)

    @property
    def mu_ns(self) -> int:
        return sum(1 for c in self.word if not c.is_separating)

    @property
    def sigma(self) -> int:
        return sum(1 for c in self.word if c.is_separating)

    def separating_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for c in self.word:
            if c.is_separating:
                counts[c.index] = counts.get(c.index, 0) + 1
        return counts

    def replace_word(self, word) -> "FibrationSpec":
        return FibrationSpec(genus=self.genus, word=tuple(word), base=self.base)


class ValidationReport(Frozen):
    violations: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class HandleSummary(Frozen):
    """Handle counts of M = Σ_h×D² ∪ 2-handles (∪ Σ_h×D² over the sphere)."""
    one_handles_upstairs: int
    two_handles: int
    relative_framing: int = -1
    chi_m0: int
    chi_m: Optional[int] = None


class SymplecticValue(str, Enum):
    PLUS_I = "+I"
    MINUS_I = "-I"
    OTHER = "other"


class Verdict(str, Enum):
    IDENTITY_UPSTAIRS = "IdentityUpstairs"
    HYPERELLIPTIC_INVOLUTION = "HyperellipticInvolution"
    NOT_TRIVIAL = "NotTrivial"


class IdentityCertificate(Frozen):
    """Evidence that a monodromy word is (or is not) the identity upstairs."""
    permutation_trivial: bool
    symplectic_value: SymplecticValue
    action_inner: bool
    verdict: Verdict

    @classmethod
    def from_checks(
        cls, permutation_trivial: bool, action_inner: bool, symplectic_value: SymplecticValue
    ) -> "IdentityCertificate":
        downstairs = permutation_trivial and action_inner
        if downstairs and symplectic_value == SymplecticValue.PLUS_I:
            verdict = Verdict.IDENTITY_UPSTAIRS
        elif downstairs and symplectic_value == SymplecticValue.MINUS_I:
            verdict = Verdict.HYPERELLIPTIC_INVOLUTION
        else:
            verdict = Verdict.NOT_TRIVIAL
        return cls(
            permutation_trivial=permutation_trivial,
            symplectic_value=symplectic_value,
            action_inner=action_inner,
            verdict=verdict,
        )

    @property
    def certified(self) -> bool:
        return self.verdict == Verdict.IDENTITY_UPSTAIRS


class Classification(Frozen):
    """Downstairs shape of a symmetric curve: an arc between marked points, or a loop."""
    kind: CycleKind
    endpoints: Optional[Tuple[int, int]] = None
    enclosed: Optional[Tuple[int, ...]] = None

    @property
    def genus(self) -> Optional[int]:
        if self.enclosed is None:
            return None
        return (len(self.enclosed) - 1) // 2


class FramingLift(Frozen):
    base_framing: int
    mutual_linking: int
    lifted_framing: int


class BandRecord(Frozen):
    cycle_index: int
    arc: Classification
    twist: str = "LeftHalfTwist"


class SepModelRecord(Frozen):
    cycle_index: int
    loop: Classification
    handles: Tuple[int, int] = (-1, -2)
    sphere_square: int = -2
    blowups: int = 2


class AmbientKind(str, Enum):
    S2_X_S2 = "S2xS2"
    TWISTED_S2_BUNDLE = "S2~xS2"
    CP2_BLOWN_UP = "CP2_blownup"
    S2_X_D2_BLOWN_UP = "S2xD2_blownup"


class Ambient(Frozen):
    """The 4-manifold a branched cover lives over; `blowups` counts CP̄² summands."""
    kind: AmbientKind
    blowups: int = 0

    @property
    def label(self) -> str:
        if self.kind == AmbientKind.CP2_BLOWN_UP:
            return f"CP2#{self.blowups}CP2bar"
        if self.kind == AmbientKind.S2_X_D2_BLOWN_UP:
            return f"S2xD2#{self.blowups}CP2bar" if self.blowups else "S2xD2"
        return self.kind.value

    @property
    def euler(self) -> int:
        if self.kind == AmbientKind.CP2_BLOWN_UP:
            return 3 + self.blowups
        if self.kind == AmbientKind.S2_X_D2_BLOWN_UP:
            return 2 + self.blowups
        return 4

    @property
    def signature(self) -> int:
        if self.kind == AmbientKind.CP2_BLOWN_UP:
            return 1 - self.blowups
        if self.kind == AmbientKind.S2_X_D2_BLOWN_UP:
            return -self.blowups
        return 0


class Parity(str, Enum):
    TRIVIAL = "Trivial"
    TWISTED = "Twisted"


class BranchedCoverDescription(Frozen):
    """Ambient 4-manifold, branch surface pieces and cover invariants over the sphere."""
    ambient: Ambient
    disks: int
    bands: Tuple[BandRecord, ...]
    sep_models: Tuple[SepModelRecord, ...]
    closure_braid: BraidWord
    chi_branch: int
    chi_mprime: int
    chi_m: int
    blowdowns: int
    parity: Optional[Parity] = None
    sigma_endo: Optional[int] = None


class RelativeCoverDescription(Frozen):
    """Branched-cover description of a fibration over the disk."""
    ambient: Ambient
    disks: int
    bands: Tuple[BandRecord, ...]
    sep_models: Tuple[SepModelRecord, ...]
    boundary_braid: BraidWord
    chi_branch: int
    chi_mprime: int
    chi_m0: int


class Handle2(Frozen):
    """A framed 2-handle. `linking` is its row of the linking matrix (diagonal = framing)."""
    framing: int
    linking: Tuple[int, ...]
    runs_over: Tuple[int, ...] = ()
    label: str = ""


class FramedHandleComplex(Frozen):
    dotted: int
    handles2: Tuple[Handle2, ...] = ()
    handles3: int = 0

    @validator("handles2")
    def _symmetric_linking(cls, v):
        size = len(v)
        for i, handle in enumerate(v):
            if len(handle.linking) != size:
                raise ValueError(f"linking row {i} has length {len(handle.linking)}, expected {size}")
            if handle.linking[i] != handle.framing:
                raise ValueError(f"linking row {i} must carry the framing on its diagonal")
            for j in range(size):
                if handle.linking[j] != v[j].linking[i]:
                    raise ValueError(f"linking data not symmetric at ({i}, {j})")
        return v

    @property
    def euler(self) -> int:
        return 1 - self.dotted + len(self.handles2) - self.handles3

    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(h.linking for h in self.handles2)

    def index_of(self, label: str) -> int:
        for i, handle in enumerate(self.handles2):
            if handle.label == label:
                return i
        raise KeyError(label)

    def labels(self) -> Tuple[str, ...]:
        return tuple(h.label for h in self.handles2)


class MoveKind(str, Enum):
    BLOW_DOWN = "BlowDown"
    CANCEL_PAIR_12 = "CancelPair12"
    CANCEL_PAIR_23 = "CancelPair23"
    SLIDE = "Slide"


class MoveEntry(Frozen):
    move: MoveKind
    targets: Tuple[str, ...]
    chi_before: int
    chi_after: int
    signature_before: int
    signature_after: int


class MoveLog(Frozen):
    entries: Tuple[MoveEntry, ...] = ()

    def append(self, entry: MoveEntry) -> "MoveLog":
        return MoveLog(entries=self.entries + (entry,))

    def count(self, move: MoveKind) -> int:
        return sum(1 for e in self.entries if e.move == move)

    def __len__(self) -> int:
        return len(self.entries)


class MilnorData(Frozen):
    """Deformation of the infinitely close n-tuple point z^n + w^(2n) = 0."""
    n: int
    sphere_count: int
    chi_fiber: int
    chi_cover: int


class ResolutionData(Frozen):
    """Resolution of the same singularity by two blow-ups, and its double cover."""
    g: int
    genus_g_surface_square: int = -2
    sphere_square: int = -1
    intersections: int = 1
    blown_down_square: int = -1
    chi_before: int
    chi_after: int


class DefVsRes(Frozen):
    milnor: MilnorData
    resolution: ResolutionData
    coincide: bool


class Singularity(Frozen):
    cycle_index: int
    g: int
    n: int
