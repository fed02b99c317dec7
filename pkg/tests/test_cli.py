import json

import pytest

from gl4coh.cli import EXIT_INVARIANT, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run
from gl4coh.invariants import fixtures_dir, golden_texts


def ok(argv):
    code, out, err = run(argv)
    assert code == EXIT_OK, err
    return out


def test_gl4():
    assert ok(["gl4", "--n", "12"]) == "H^3 = 2 (line 1 + cusp 1)\n"


def test_kostant_p13():
    assert ok(["kostant", "--blocks", "3,1", "--lambda", "9,1,1,1"]).splitlines() == [
        "1234 : 0 : [9,1,1,1]", "1243 : 1 : [9,1,0,2]", "1342 : 2 : [9,0,0,3]", "2341 : 3 : [0,0,0,12]"]


def test_euler_gl3():
    assert ok(["euler", "--gl3", "--family", "L[k,1,0]", "--k", "13"]) == "1\n"
    assert ok(["euler", "--gl2", "--k", "10", "--det"]) == "-2\n"
    assert ok(["euler", "--gl4", "--n", "12"]) == "-2\n"


def test_boundary_json():
    data = json.loads(ok(["boundary", "--n", "12", "--format", "json"]))
    assert (data["n"], data["h3"], data["ghost"]) == (12, 2, 0)


def test_gl2_render():
    assert ok(["gl2", "--lambda", "11,1"]) == "H^1 = Eis 1 ⊕ Cusp 1\n"
    assert ok(["gl2", "--lambda", "2,1"]) == "0\n"


def test_tex_and_diagram():
    assert "\\overline{9,-1}" in ok(["boundary", "--n", "12", "--format", "tex"])
    assert ok(["boundary", "--n", "12", "--diagram"]).startswith("digraph boundary {")
    assert "\\begin{tabular}" in ok(["table", "--n-max", "20", "--format", "tex"])


def test_symbolic_parabolic():
    assert ok(["parabolic", "--blocks", "1,3"]) == "P24\n3: (0|n-2,0‾|2) ⊕ (0|0|0|n)\n6: (-2|0|n-1,3‾)\n"


def test_trace():
    assert ok(["trace", "--blocks", "T6,1", "--k", "7", "--family", "L[k,1,0]"]).startswith("Tr([T6,1] | L[k,1,0], k=7) = 2")


@pytest.mark.parametrize("argv", [
    ["bogus"], ["gl4"], ["boundary", "--n", "13"], ["gl3", "--family", "L[9,9,9]", "--n", "12"],
    ["kostant", "--blocks", "3,1", "--lambda", "1,2,3,4"], ["gl4", "--n", "x"], ["trace", "--blocks", "T5"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == EXIT_USAGE


def test_validation_exit(monkeypatch):
    import gl4coh.boundary as b
    monkeypatch.setattr(b, "chi_gl4", lambda n: 7)
    assert run(["gl4", "--n", "16"])[0] == EXIT_MISMATCH


def test_determinism():
    for argv in (["boundary", "--n", "28", "--format", "json"], ["table", "--n-max", "60"], ["weyl-table"]):
        assert run(argv) == run(argv)


def test_fixtures_are_byte_identical():
    for name, text in golden_texts().items():
        assert (fixtures_dir() / name).read_text(encoding="utf-8") == text


def test_verify_reports_known_failures(tmp_path):
    code, out, _ = run(["verify", "--n-max", "8"])
    assert code == EXIT_INVARIANT
    failed = [l for l in out.splitlines() if l.startswith("FAIL")]
    assert len(failed) == 2
    assert "GL_3 Euler identity (b)" in failed[0] and "concentrated in degree 3" in failed[1]


def test_verify_detects_fixture_drift(tmp_path):
    for name, text in golden_texts().items():
        (tmp_path / name).write_text(text.replace("n-3", "n-4") if name == "weyl_table.txt" else text, encoding="utf-8")
    code, out, _ = run(["verify", "--n-max", "8", "--fixtures", str(tmp_path)])
    assert code == EXIT_INVARIANT and "FAIL  fixtures: weyl_table.txt" in out
