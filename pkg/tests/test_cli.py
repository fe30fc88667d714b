import json
import subprocess
import sys

import pytest

from qlsquares import io
from qlsquares.cli import main
from qlsquares.constructions import build_phi17, hadamard_pair
from qlsquares.square import verify


@pytest.fixture
def phi17_file(tmp_path):
    path = tmp_path / "phi17.json"
    assert main(["gen", "phi17", "-o", str(path)]) == 0
    return path


def test_gen_stdout(capsys):
    assert main(["gen", "phi13"]) == 0
    out = capsys.readouterr().out
    assert io.loads(out) == io.loads(io.dumps(io.loads(out)))
    assert json.loads(out)["meta"]["name"] == "phi13"


def test_verify_valid_and_invalid(phi17_file, tmp_path, capsys):
    assert main(["verify", str(phi17_file)]) == 0
    assert capsys.readouterr().out.strip().endswith("valid")
    bad = build_phi17().replace((0, 0), hadamard_pair(6, 1, 2).p)
    path = tmp_path / "bad.json"
    io.save(bad, path)
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert "row 0: FAIL pair (0, 1)" in out and out.strip().endswith("INVALID")


def test_card(phi17_file, capsys):
    assert main(["card", str(phi17_file)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "cardinality 17"
    assert len(out) == 18
    assert any("p04" in ln and "(0,0)" in ln for ln in out)


def test_decompose(phi17_file, capsys):
    assert main(["decompose", str(phi17_file)]) == 0
    out = capsys.readouterr().out
    assert "R3 | (15)∪(03)∪(24)" in out
    assert "C1 | (04)∪(23)∪(15)" in out


def test_show(phi17_file, capsys):
    assert main(["show", str(phi17_file)]) == 0
    assert capsys.readouterr().out.splitlines()[2].split() == "p15 p03 q03 p24 q15 q24".split()


def test_fmt_canonicalizes(tmp_path):
    path = tmp_path / "loose.json"
    doc = {"grid": [[["2/2", "0"], ["0", "1"]], [["0", "1"], ["1", "0*r2"]]], "order": 2, "format": "qls/1",
           "meta": {"name": "tiny"}}
    path.write_text(json.dumps(doc, indent=4))
    assert main(["fmt", str(path)]) == 0
    text = path.read_text()
    assert '["1","0"]' in text and '"0*r2"' not in text
    assert main(["fmt", str(path)]) == 0
    assert path.read_text() == text
    assert io.load_meta(text) == {"name": "tiny"}


def test_search_streams_documents(capsys):
    rc = main(["search", "--order", "2", "--pairs", "0-1", "--singles", "0,1"])
    assert rc == 0
    cap = capsys.readouterr()
    docs = [io.loads(ln) for ln in cap.out.splitlines()]
    assert len(docs) == 4 and all(verify(q).valid for q in docs)
    assert "found=4" in cap.err


def test_search_card_filter_and_limits(capsys):
    rc = main(["search", "--order", "4", "--pairs", "0-1,2-3", "--singles", "0,1,2,3",
               "--card", "8:8", "--max-results", "2"])
    assert rc == 0
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_search_budget_exhausted(capsys):
    rc = main(["search", "--order", "6", "--pairs", "0-1,0-3,0-4,1-2,1-5,2-3,2-4", "--singles", "3,4,5",
               "--card", "17:17", "--max-nodes", "100"])
    assert rc == 3
    assert "budget_exhausted=True" in capsys.readouterr().err


def test_search_symmetry_flag(capsys):
    assert main(["search", "--order", "2", "--pairs", "0-1", "--singles", "0,1", "--symmetry"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2


@pytest.mark.parametrize("argv", [
    ["gen", "phi99"],
    ["search", "--order", "3", "--pairs", "0:1"],
    ["search", "--order", "3", "--card", "5"],
    [],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_input_errors_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"format": "qls/1", "order": 1, "grid": [[["1/0"]]]}')
    assert main(["verify", str(path)]) == 2
    assert "zero denominator" in capsys.readouterr().err
    assert main(["card", str(tmp_path / "missing.json")]) == 2
    assert main(["search", "--order", "3", "--pairs", "2-1"]) == 2


def test_console_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "qlsquares.cli", "gen", "phi15"],
                         capture_output=True, text=True, check=True).stdout
    assert io.loads(out) == io.loads(io.dumps(io.loads(out)))
