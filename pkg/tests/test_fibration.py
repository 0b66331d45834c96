from branchcover.dsl import parse_fibration
from branchcover.fibration import canonicalize, handle_summary, validate
from branchcover.models import BraidWord, CycleKind, FibrationSpec, SymmetricCycle


def _cycle(kind, index, strands=6):
    return SymmetricCycle(kind=kind, index=index, conjugator=BraidWord.identity(strands))


def test_validate_accepts_parsed_words(matsumoto):
    """Test that a parsed fibration validates cleanly."""
    report = validate(matsumoto)
    assert report.ok
    assert report.violations == ()


def test_validate_reports_arc_out_of_range():
    """Test the violation message for a6 in genus 2."""
    spec = FibrationSpec(genus=2, word=(_cycle(CycleKind.ARC, 6),))
    report = validate(spec)
    assert not report.ok
    assert report.violations == ("cycle 1: arc index 6 > 2h+1=5",)


def test_validate_reports_conjugator_strands():
    """Test that conjugators on the wrong number of strands are violations."""
    spec = FibrationSpec(genus=2, word=(_cycle(CycleKind.ARC, 1, strands=4),))
    assert not validate(spec).ok


def test_non_canonical_separating_genus_is_a_note():
    """Test that s3 in genus 4 is a note, and canonicalize rewrites it to s1."""
    spec = FibrationSpec(genus=4, word=(_cycle(CycleKind.SEPARATING, 3, strands=10),))
    report = validate(spec)
    assert report.ok
    assert report.notes == ("cycle 1: separating genus 3 canonicalized to 1",)
    assert canonicalize(spec).word[0].index == 1


def test_handle_summary_sphere(matsumoto):
    """Test χ(M) = 2(2 − 2h) + μ for the Matsumoto word."""
    summary = handle_summary(matsumoto)
    assert summary.one_handles_upstairs == 4
    assert summary.two_handles == 8
    assert summary.relative_framing == -1
    assert summary.chi_m0 == 6
    assert summary.chi_m == 4


def test_handle_summary_disk():
    """Test that only χ(M₀) is reported over the disk."""
    spec = parse_fibration("genus 3; base disk; word = [a1, a2, a3]")
    summary = handle_summary(spec)
    assert summary.chi_m0 == -1
    assert summary.chi_m is None
