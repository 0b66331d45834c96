import pytest

from branchcover.dsl import format_braid, parse_fibration, print_fibration, tokenize
from branchcover.errors import DSLSyntaxError, IndexOutOfRange
from branchcover.models import Base, BraidWord, CycleKind

from conftest import EXTENDED, MATSUMOTO


def test_parse_three_cycle_word():
    """Test the grammar walk on a mixed word."""
    spec = parse_fibration("genus 2; base sphere; word = [a1, conj(a2; t1), s1]")
    assert spec.genus == 2
    assert spec.base == Base.SPHERE
    assert spec.mu == 3
    first, second, third = spec.word
    assert first.kind == CycleKind.ARC and first.index == 1 and len(first.conjugator) == 0
    assert second.index == 2 and second.conjugator.letters == ((1, 1),)
    assert third.kind == CycleKind.SEPARATING and third.index == 1


def test_parse_empty_word_over_disk():
    """Test that an empty word parses."""
    spec = parse_fibration("genus 1; base disk; word = []")
    assert spec.base == Base.DISK
    assert spec.mu == 0


def test_comments_and_whitespace_are_ignored():
    """Test that comments and line breaks do not matter."""
    text = "# a comment\ngenus 1 ;\n base sphere; # trailing\n word=[ a1 ,a2 ]\n"
    assert parse_fibration(text) == parse_fibration("genus 1; base sphere; word = [a1, a2]")


def test_inverse_letters_in_conjugators():
    """Test primed letters parse as inverse generators."""
    spec = parse_fibration("genus 2; base sphere; word = [conj(a1; t2 t3')]")
    assert spec.word[0].conjugator.letters == ((2, 1), (3, -1))


def test_nested_conjugation_parses_flat():
    """Test that conj(conj(c; w); v) equals conj(c; v w)."""
    nested = parse_fibration("genus 2; base sphere; word = [conj(conj(a3; t2 t4); t3)]")
    flat = parse_fibration("genus 2; base sphere; word = [conj(a3; t3 t2 t4)]")
    assert nested == flat


def test_arc_index_out_of_range():
    """Test that a6 is rejected for genus 2 with a position."""
    with pytest.raises(IndexOutOfRange) as exc_info:
        parse_fibration("genus 2; base sphere; word = [a6]")
    assert exc_info.value.line == 1
    assert exc_info.value.column == 32
    assert exc_info.value.exit_code == 2


def test_separating_genus_out_of_range():
    """Test that s2 is rejected for genus 2."""
    with pytest.raises(IndexOutOfRange):
        parse_fibration("genus 2; base sphere; word = [s2]")


def test_braid_generator_out_of_range():
    """Test that t6 is rejected on 6 strands."""
    with pytest.raises(IndexOutOfRange):
        parse_fibration("genus 2; base sphere; word = [conj(a1; t6)]")


def test_missing_semicolon_reports_position():
    """Test that syntax errors carry the line and column of the offending token."""
    with pytest.raises(DSLSyntaxError) as exc_info:
        parse_fibration("genus 2\nbase sphere; word = []")
    assert exc_info.value.line == 2
    assert exc_info.value.column == 1


def test_unexpected_character():
    """Test that stray characters are syntax errors."""
    with pytest.raises(DSLSyntaxError):
        tokenize("genus 2; base sphere; word = [a1 & a2]")


def test_unknown_base():
    """Test that only disk and sphere are accepted as bases."""
    with pytest.raises(DSLSyntaxError):
        parse_fibration("genus 2; base torus; word = []")


def test_separating_genus_is_canonicalized():
    """Test that s3 in genus 4 is stored as s1."""
    spec = parse_fibration("genus 4; base sphere; word = [s3]")
    assert spec.word[0].index == 1


def test_canonicalization_warns_about_the_moved_loop(mocker):
    """Test that replacing s3 by s1 in genus 4 is reported, and s1 in genus 2 is not."""
    warning = mocker.patch("branchcover.dsl.logger.warning")
    parse_fibration("genus 2; base sphere; word = [s1, s1]")
    warning.assert_not_called()
    parse_fibration("genus 4; base sphere; word = [s3]")
    warning.assert_called_once()
    assert "encloses points 1..3" in warning.call_args[0][0]


@pytest.mark.parametrize("text", [MATSUMOTO, EXTENDED, "genus 3; base disk; word = [conj(s1; t4' t2), a7]"])
def test_print_then_parse_is_identity(text):
    """Test that printing is a right inverse of parsing."""
    spec = parse_fibration(text)
    printed = print_fibration(spec)
    assert parse_fibration(printed) == spec
    assert print_fibration(parse_fibration(printed)) == printed


def test_print_format():
    """Test the canonical single-line form."""
    spec = parse_fibration("genus 2;base sphere;word=[a1,conj(a2;t1),s1]")
    assert print_fibration(spec) == "genus 2; base sphere; word = [a1, conj(a2; t1), s1]"


def test_format_braid():
    """Test that inverse letters print with a prime."""
    assert format_braid(BraidWord(strands=4, letters=((1, 1), (3, -1)))) == "t1 t3'"
