"""End-to-end runs shared by the HTTP routes and the command line."""
import hashlib
import time
from typing import Optional, Sequence, Tuple

from .branch import compile_branched_cover, compile_relative_cover
from .config import settings
from .dsl import parse_fibration, print_fibration
from .errors import IndexOutOfRange, NotCertified, RangeError
from .fibration import canonicalize, validate
from .invariants import check_cover_identity, deform_cycle, resolve_block
from .kirby import emit_gamma0_model, relatively_minimalize, render_handle_list, simplify_model
from .mcg import certify_global_monodromy
from .models import Base, FibrationSpec, IdentityCertificate
from .schemas.cover import (
    CertificateResponse,
    CoverDescriptionResponse,
    HandleComplexResponse,
    RelativeCoverResponse,
    RewriteResponse,
    RunReport,
    move_list,
)
from .utils.logging import logger


def source_digest(source: str) -> str:
    return hashlib.sha256(source.encode("utf-8")).hexdigest()


class CoverPipeline:
    """Parse, certify, compile and rewrite fibration source text."""

    def __init__(self, schema_version: Optional[int] = None):
        self.schema_version = schema_version or settings.SCHEMA_VERSION

    def load(self, source: str) -> FibrationSpec:
        """
        Parse and validate source text.

        Raises:
            DSLSyntaxError: The text does not follow the grammar
            IndexOutOfRange: A cycle does not fit the declared genus
        """
        spec = parse_fibration(source)
        report = validate(spec)
        if not report.ok:
            raise IndexOutOfRange("; ".join(report.violations))
        for note in report.notes:
            logger.info(note)
        return canonicalize(spec)

    def check(self, source: str) -> Tuple[FibrationSpec, IdentityCertificate, CertificateResponse]:
        spec = self.load(source)
        certificate = certify_global_monodromy(spec)
        response = CertificateResponse.from_domain(source_digest(source), spec.genus, spec.mu, certificate)
        return spec, certificate, response

    def compile(self, source: str, emit_kirby: bool = False) -> RunReport:
        """
        Run the whole pipeline on one fibration.

        Args:
            source: Fibration source text
            emit_kirby: Also emit the Σ_h×D² model, and the extended model with
                its simplification log for every separating genus present

        Returns:
            RunReport: Certificate (sphere base only), cover description and handle data

        Raises:
            NotCertified: A closed fibration whose global monodromy is not the identity
            DivisibilityError: Nonseparating-only word of the wrong length
        """
        timings = {}
        started = time.perf_counter()
        spec = self.load(source)
        timings["parse"] = time.perf_counter() - started

        report = RunReport(schema_version=self.schema_version, digest=source_digest(source))
        if spec.base == Base.SPHERE:
            started = time.perf_counter()
            certificate = certify_global_monodromy(spec)
            timings["certify"] = time.perf_counter() - started
            report.certificate = CertificateResponse.from_domain(
                report.digest, spec.genus, spec.mu, certificate
            )
            if not certificate.certified:
                raise NotCertified(f"global monodromy verdict is {certificate.verdict.value}")

            started = time.perf_counter()
            description = compile_branched_cover(spec, certificate)
            timings["compile"] = time.perf_counter() - started
            if not check_cover_identity(description):
                logger.error(f"Euler identity failed for {report.digest}")
            report.description = CoverDescriptionResponse.from_domain(description, self.schema_version)
        else:
            relative = compile_relative_cover(spec)
            report.relative = RelativeCoverResponse.from_domain(relative, self.schema_version)

        if emit_kirby:
            started = time.perf_counter()
            h = spec.genus
            report.handle_complexes["gamma0"] = render_handle_list(emit_gamma0_model(h))
            for g in sorted(spec.separating_counts()):
                extended = emit_gamma0_model(h, g, extended=True)
                simplified, log = simplify_model(extended)
                minimal, final = relatively_minimalize(simplified)
                report.handle_complexes[f"extended_g{g}"] = render_handle_list(extended)
                report.handle_complexes[f"minimal_g{g}"] = render_handle_list(minimal)
                report.move_logs[f"extended_g{g}"] = move_list(log) + move_list(final)
            timings["kirby"] = time.perf_counter() - started

        report.timings = timings
        logger.debug(f"Timings for {report.digest[:12]}: {timings}")
        return report

    def rewrite(
        self,
        source: str,
        deform: Optional[int] = None,
        resolve: Optional[Sequence[int]] = None,
    ) -> Tuple[FibrationSpec, RewriteResponse]:
        """
        Deform one separating cycle or resolve one chain block.

        Indices are 0-based; `resolve` is a half-open range [start, stop).

        Raises:
            RangeError: The position or range lies outside the word, or the range is empty
            NotSeparating: `deform` points at a nonseparating cycle
            NotAChainBlock: `resolve` does not cover a chain block
        """
        if (deform is None) == (resolve is None):
            raise ValueError("exactly one of deform and resolve is required")
        spec = self.load(source)
        if deform is not None:
            rewritten = deform_cycle(spec, deform)
        else:
            start, stop = resolve
            if not 0 <= start < stop <= spec.mu:
                raise RangeError(f"block {start}..{stop} outside 0..{spec.mu}")
            rewritten = resolve_block(spec, start, stop)

        verdict = None
        if rewritten.base == Base.SPHERE:
            verdict = certify_global_monodromy(rewritten).verdict.value
        return rewritten, RewriteResponse(source=print_fibration(rewritten), mu=rewritten.mu, verdict=verdict)

    def handles(self, h: int, g: Optional[int] = None, simplify: bool = False) -> HandleComplexResponse:
        """Handle list of the Σ_h×D² model, or of the extended model when `g` is given."""
        if g is None:
            return HandleComplexResponse.from_domain(h, None, emit_gamma0_model(h))
        extended = emit_gamma0_model(h, g, extended=True)
        if not simplify:
            return HandleComplexResponse.from_domain(h, g, extended)
        simplified, log = simplify_model(extended)
        return HandleComplexResponse.from_domain(h, g, extended, simplified, log)
