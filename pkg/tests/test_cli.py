import argparse
import json

import pandas as pd
import pytest

from branchcover.cli import main, resolve_range
from branchcover.dsl import parse_fibration
from branchcover.errors import DivisibilityError

from conftest import HYPERELLIPTIC_SQUARED, MATSUMOTO


@pytest.fixture
def write(tmp_path):
    """Write fibration source to a file and return its path."""
    def _write(text, name="fibration.fib"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def test_check_empty_word(write, capsys):
    """Test that the empty word certifies."""
    assert main(["check", write("genus 2; base sphere; word = []")]) == 0
    certificate = json.loads(capsys.readouterr().out)
    assert certificate["verdict"] == "IdentityUpstairs"
    assert certificate["mu"] == 0


def test_check_hyperelliptic_relation_squared(write):
    """Test that (a1..a5 a5..a1)² certifies."""
    assert main(["check", write(HYPERELLIPTIC_SQUARED)]) == 0


def test_check_single_arc_fails(write, capsys):
    """Test that [a1] over the sphere exits 1."""
    assert main(["check", write("genus 2; base sphere; word = [a1]")]) == 1
    assert json.loads(capsys.readouterr().out)["verdict"] == "NotTrivial"


def test_check_syntax_error(write):
    """Test that parse errors exit 2."""
    assert main(["check", write("genus 2 base sphere; word = []")]) == 2


def test_check_index_out_of_range(write):
    """Test that a6 in genus 2 exits 2."""
    assert main(["check", write("genus 2; base sphere; word = [a6]")]) == 2


def test_check_missing_file(tmp_path):
    """Test that unreadable files exit 2."""
    assert main(["check", str(tmp_path / "missing.fib")]) == 2


def test_check_many_files_reports_worst_code(write):
    """Test that the exit code is the worst over all files."""
    good = write("genus 2; base sphere; word = []", "good.fib")
    bad = write("genus 2; base sphere; word = [a1]", "bad.fib")
    assert main(["check", good, bad, "--workers", "2"]) == 1


def test_check_json_report(write, capsys):
    """Test that --json wraps the certificate in a run report."""
    assert main(["check", write(MATSUMOTO), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == 1
    assert report["certificate"]["verdict"] == "IdentityUpstairs"
    assert "timings" not in report


def test_compile_matsumoto(write, capsys):
    """Test the description printed for the Matsumoto fibration."""
    assert main(["compile", write(MATSUMOTO)]) == 0
    description = json.loads(capsys.readouterr().out)
    assert description["schema"] == 1
    assert description["ambient"] == "CP2#5CP2bar"
    assert description["chi_M"] == 4
    assert description["blowdowns"] == 2
    assert len(description["bands"]) == 6


def test_compile_nonseparating_word(write, capsys):
    """Test that the squared hyperelliptic relation lives over S²×S²."""
    assert main(["compile", write(HYPERELLIPTIC_SQUARED)]) == 0
    description = json.loads(capsys.readouterr().out)
    assert description["ambient"] == "S2xS2"
    assert description["parity"] == "Trivial"


def test_compile_relative(write, capsys):
    """Test that fibrations over the disk compile to a relative description."""
    assert main(["compile", write("genus 3; base disk; word = [a1, a2, a3]")]) == 0
    description = json.loads(capsys.readouterr().out)
    assert description["ambient"] == "S2xD2"
    assert description["chi_M0"] == -1


def test_compile_uncertified(write):
    """Test that uncertified words exit 1."""
    assert main(["compile", write("genus 2; base sphere; word = [a1]")]) == 1


def test_compile_divisibility_error(write, mocker):
    """Test that divisibility errors get their own exit code."""
    mocker.patch(
        "branchcover.pipeline.compile_branched_cover",
        side_effect=DivisibilityError("7 nonseparating cycles is not a multiple of 10"),
    )
    assert main(["compile", write(HYPERELLIPTIC_SQUARED)]) == 3


def test_compile_kirby_to_stdout(write, capsys):
    """Test that handle lists are printed under their names."""
    assert main(["compile", write(MATSUMOTO), "--emit", "kirby"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# extended_g1\n")
    assert "# gamma0\ndot\n" in out
    assert "# minimal_g1\n" in out


def test_compile_writes_exports(write, tmp_path, capsys):
    """Test that --out writes the report, handle lists and move log."""
    out_dir = tmp_path / "out"
    source = write(MATSUMOTO, "matsumoto.fib")
    assert main(["compile", source, "--emit", "json", "--emit", "kirby", "--out", str(out_dir)]) == 0
    assert capsys.readouterr().out == ""
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == [
        "matsumoto.extended_g1.kirby",
        "matsumoto.gamma0.kirby",
        "matsumoto.json",
        "matsumoto.minimal_g1.kirby",
        "matsumoto.moves.csv",
    ]
    report = json.loads((out_dir / "matsumoto.json").read_text())
    assert report["description"]["ambient"] == "CP2#5CP2bar"
    moves = pd.read_csv(out_dir / "matsumoto.moves.csv")
    assert list(moves["move"]) == ["CancelPair12", "Slide", "CancelPair23", "BlowDown"]
    assert moves.loc[0, "targets"] == "delta0~2 dot6"


def test_compile_csv_only(write, tmp_path, capsys):
    """Test that --emit csv writes the move log on its own or prints it."""
    out_dir = tmp_path / "csv"
    source = write(MATSUMOTO, "matsumoto.fib")
    assert main(["compile", source, "--emit", "csv", "--out", str(out_dir)]) == 0
    assert [p.name for p in out_dir.iterdir()] == ["matsumoto.moves.csv"]

    capsys.readouterr()
    assert main(["compile", source, "--emit", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# moves\ncomplex,step,move,targets,")
    assert "extended_g1,4,BlowDown,alpha," in out


def test_compile_rejects_unknown_emit(write):
    """Test that only supported export formats can be emitted."""
    with pytest.raises(SystemExit):
        main(["compile", write(MATSUMOTO), "--emit", "pdf"])


def test_compile_is_deterministic(write, capsys):
    """Test that two runs print identical bytes."""
    source = write(MATSUMOTO)
    main(["compile", source, "--json", "--emit", "kirby"])
    first = capsys.readouterr().out
    main(["compile", source, "--json", "--emit", "kirby"])
    assert capsys.readouterr().out == first


def test_rewrite_deform_then_resolve(write, capsys):
    """Test that --deform 1 on [s1] gives twelve cycles and --resolve 1..12 undoes it."""
    original = "genus 2; base sphere; word = [s1]"
    assert main(["rewrite", write(original, "sep.fib"), "--deform", "1"]) == 0
    deformed = capsys.readouterr().out
    assert parse_fibration(deformed).mu == 12

    assert main(["rewrite", write(deformed, "chain.fib"), "--resolve", "1..12"]) == 0
    assert capsys.readouterr().out == original + "\n"


def test_rewrite_writes_source(write, tmp_path):
    """Test that --out writes the rewritten fibration."""
    out_dir = tmp_path / "out"
    source = write("genus 2; base disk; word = [s1]", "sep.fib")
    assert main(["rewrite", source, "--deform", "1", "--out", str(out_dir)]) == 0
    assert parse_fibration((out_dir / "sep.rewritten.fib").read_text()).mu == 12


@pytest.mark.parametrize(
    "flags",
    [["--resolve", "1..2"], ["--deform", "1"], ["--deform", "9"], ["--resolve", "3..20"]],
)
def test_rewrite_refused(write, flags):
    """Test that rewrites which do not apply exit 1."""
    assert main(["rewrite", write(MATSUMOTO)] + flags) == 1


def test_rewrite_needs_exactly_one_operation(write):
    """Test that --deform and --resolve are mutually exclusive and required."""
    source = write(MATSUMOTO)
    with pytest.raises(SystemExit):
        main(["rewrite", source])
    with pytest.raises(SystemExit):
        main(["rewrite", source, "--deform", "4", "--resolve", "1..2"])


def test_resolve_range():
    """Test that A..B is 1-based and inclusive."""
    assert resolve_range("1..12") == (0, 12)
    assert resolve_range("5..5") == (4, 5)
    for text in ("3..2", "0..4", "1-4"):
        with pytest.raises(argparse.ArgumentTypeError):
            resolve_range(text)
