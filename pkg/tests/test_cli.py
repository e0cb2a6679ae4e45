import json

from dihedral_loci.cli import cli_main


def test_classify_markdown(capsys):
    code = cli_main(["classify", "--cover-type", "II", "--group-type", "1", "--n", "6", "--format", "md"])
    out = capsys.readouterr().out
    assert code == 0
    assert "orbits: 4" in out and "| # |" in out


def test_classify_mismatch_exit(capsys):
    assert cli_main(["classify", "--cover-type", "I", "--n", "6"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1 and doc["orbit_count"] == 2


def test_usage_errors(capsys):
    assert cli_main(["classify", "--cover-type", "I"]) == 2
    assert cli_main(["bogus"]) == 2
    assert cli_main(["classify", "--cover-type", "V", "--n", "4"]) == 2
    assert cli_main(["classify", "--cover-type", "I", "--group-type", "2", "--n", "5"]) == 2
    assert cli_main(["tables", "--n", "4", "--node-cap", "0"]) == 2


def test_cap_overflow_exit(capsys):
    assert cli_main(["classify", "--cover-type", "I", "--n", "4", "--node-cap", "2"]) == 3


def test_tables_note(capsys):
    code = cli_main(["tables", "--n", "7", "--format", "md"])
    cap = capsys.readouterr()
    assert code == 0
    assert "verified tables I.1, II.1, II.2a" in cap.err
    assert "### I.1" in cap.out


def test_out_file_and_orbit(tmp_path, capsys):
    out = tmp_path / "orbit.json"
    code = cli_main(["orbit", "--n", "4", "--vector", "((yx,1),(e,1),(y,0),(x,0))", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["exhausted"] and doc["size"] > 0


def test_enumerate(capsys):
    assert cli_main(["enumerate", "--cover-type", "IIIb", "--n", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 12 and len(doc["vectors"]) == 12
