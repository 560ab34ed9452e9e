import subprocess
import sys

import pytest

from bpglab import named
from bpglab.cli import run
from bpglab.graph import read_graph, read_graphs, write_graph
from bpglab.letters import LetterSystem
from bpglab.universal import universal_bpg, universal_chain


@pytest.fixture
def write(tmp_path):
    def _write(name, g_or_text):
        p = tmp_path / name
        p.write_text(g_or_text if isinstance(g_or_text, str) else write_graph(g_or_text))
        return str(p)
    return _write


def test_gen_then_recognize(tmp_path, capsys):
    out = str(tmp_path / "h4.graph")
    assert run(["gen", "hnn", "4", "-o", out]) == 0
    assert read_graph(open(out).read()) == universal_bpg(4)
    assert run(["recognize", "bpg", out]) == 0
    assert run(["recognize", "bpg", out, "--mode", "constructive"]) == 0
    assert capsys.readouterr().out.split() == ["yes", "yes"]


def test_recognize_no_with_certificate(write, capsys):
    assert run(["recognize", "bpg", write("s.graph", named.sun3()), "--certificate"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("no\n") and "Sun_3" in out


def test_isi_certificate(write, capsys):
    g = write("g.graph", "p 6\ne 1 2\ne 2 3\ne 4 5\ne 5 6\n")
    h = write("h.graph", "p 4\ne 1 2\n")
    assert run(["isi", "--solver", "linear-forest-ilp", g, h, "--certificate"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "yes"
    assert "block 3 column [0, 1] x=1" in out and "block 3 column [2] x=1" in out


def test_isi_literal_rule(write, capsys):
    g = write("g.graph", named.matching(2))
    h = write("h.graph", "p 3\ne 1 2\n")
    assert run(["isi", "--solver", "p5free-matching", g, h]) == 0
    assert run(["isi", "--solver", "p5free-matching", "--literal", g, h]) == 1
    assert run(["isi", g, h]) == 0


def test_isi_precondition(write):
    assert run(["isi", "--solver", "p5free-matching", write("p.graph", named.path(5)),
                write("q.graph", named.path(2))]) == 3
    assert run(["isi", "--solver", "linear-forest-ilp", write("c.graph", named.cycle(4)),
                write("q.graph", named.path(2))]) == 3


def test_verify_universal(write, capsys):
    z5 = write("z5.graph", universal_chain(5))
    assert run(["verify-universal", "--class", "chain", "--n", "5", z5]) == 0
    assert run(["verify-universal", "--class", "bpg", "--n", "4", z5]) == 1


def test_encode_decode_roundtrip(tmp_path, write):
    src = write("h3.graph", universal_bpg(3))
    js = str(tmp_path / "h3.json")
    back = str(tmp_path / "back.graph")
    assert run(["encode", "letters", src, "-o", js]) == 0
    assert LetterSystem.from_json(open(js).read()).size <= 9 // 2 + 1
    assert run(["decode", "letters", js, "-o", back]) == 0
    assert read_graph(open(back).read()) == universal_bpg(3)
    assert run(["encode", "letters", write("s.graph", named.sun3())]) == 3


def test_encode_chain(write, capsys):
    assert run(["encode", "chain", write("c4.graph", named.cycle(4))]) == 0
    assert capsys.readouterr().out == "aabb\naabb\n"


def test_params(write, capsys):
    assert run(["params", "all", write("m.graph", named.matching(3))]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "nd: 3" in out and "distinguishing_number: 1" in out and "mis: 3" in out


def test_pivot_and_lc(write, capsys):
    z4 = write("z4.graph", universal_chain(4))
    assert run(["pivot", z4, "3", "4", "5", "6"]) == 0
    from bpglab.canon import is_isomorphic
    assert is_isomorphic(read_graph(capsys.readouterr().out), named.path(8))
    assert run(["pivot", z4, "1", "3"]) == 2
    assert run(["lc", write("p3.graph", named.path(3)), "2"]) == 0
    assert read_graph(capsys.readouterr().out) == named.complete(3)


@pytest.mark.parametrize("family,params", [("qt", ["2"]), ("rnt", ["40", "2"]), ("rnT", ["60", "1", "3"]),
                                           ("fstar", ["4"]), ("star-forest-bounded", ["3", "2"]),
                                           ("zn", ["3"]), ("spider", ["1", "2", "3"]), ("sun3", [])])
def test_gen_families(family, params, capsys):
    assert run(["gen", family, *params]) == 0
    read_graph(capsys.readouterr().out)


def test_gen_ufk_uwk(write, capsys):
    k = write("k.json", '{"k": 2, "edges": [[1, 2]]}')
    f = write("f.graph", named.complete(2))
    assert run(["gen", "ufk", f, k, "3"]) == 0
    assert read_graph(capsys.readouterr().out).m == 6
    w = write("w.json", '{"alphabet": ["a", "b"], "prefix": "", "period": "ab"}')
    k0 = write("k0.json", '{"k": 2, "edges": []}')
    assert run(["gen", "uwk", w, k0, "5"]) == 0
    assert read_graph(capsys.readouterr().out) == named.path(5)


def test_enumerate(capsys):
    assert run(["enumerate", "bpg", "5", "--count"]) == 0
    assert run(["enumerate", "graphs", "4", "--count"]) == 0
    assert capsys.readouterr().out.split() == ["13", "11"]
    assert run(["enumerate", "chain", "4"]) == 0
    assert len(read_graphs(capsys.readouterr().out)) == 6  # P5-free bipartite minus 2K_2


def test_enumerate_jobs_same_output(capsys):
    assert run(["enumerate", "class_Xi(2)", "6"]) == 0
    serial = capsys.readouterr().out
    assert run(["enumerate", "class_Xi(2)", "6", "--jobs", "2"]) == 0
    assert capsys.readouterr().out == serial


def test_caps_and_env(monkeypatch, capsys):
    monkeypatch.delenv("BPGLAB_MAX_N", raising=False)
    assert run(["enumerate", "graphs", "8", "--count"]) == 3
    monkeypatch.setenv("BPGLAB_MAX_N", "8")
    assert run(["enumerate", "bpg", "8", "--count"]) == 0
    assert capsys.readouterr().out.strip() == "239"


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["gen", "cycle", "2"],
    ["gen", "path", "x"],
    ["gen", "nosuch", "3"],
    ["recognize", "nosuch", "f"],
    ["recognize", "bpg", "/nonexistent/file"],
    ["isi", "--bogus", "a", "b"],
    [],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_malformed_inputs(write):
    bad = write("bad.graph", "p 3\ne 1 9\n")
    assert run(["recognize", "bpg", bad]) == 2
    assert run(["decode", "letters", write("bad.json", "{not json")]) == 2
    assert run(["gen", "ufk", write("f.graph", named.complete(2)), write("k.json", '{"k": 3, "edges": []}'), "2"]) == 2
    assert run(["gen", "path", "3", "-o", "/nonexistent/dir/x"]) == 2


def test_deterministic_and_reentrant(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(["gen", "rnt", "40", "2", "-o", str(a)])
    run(["gen", "rnt", "40", "2", "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()
    assert read_graph(a.read_text()).n <= 40


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bpglab.cli", "gen", "path", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "# path 3\np 3\ne 1 2\ne 2 3\n"
