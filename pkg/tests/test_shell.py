import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from conftest import random_arcs, random_bars, random_semi_arc
from viskit.atlas import gen_complete_semiarc
from viskit.bounds import expected_edges_semibar
from viskit.errors import VisError
from viskit.geometry import semi_arc, semi_bar
from viskit.graph import Graph
from viskit.shell import emit_graph, emit_representation, parse_graph, parse_representation, render_svg
from viskit.shell.cli import decimal12, main
from viskit.shell.formats import fmt_rational

ONE_ARC = '{"kind":"semi_arc","elements":[{"id":0,"r":1,"start":"0","extent":"1/5"}]}\n'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_one_arc():
    rep = parse_representation(ONE_ARC)
    assert rep.kind == "semi_arc" and rep.n == 1 and rep.elements[0].extent == F(1, 5)
    assert emit_representation(rep) == ONE_ARC


def test_parse_rejects_full_extent():
    with pytest.raises(VisError) as exc:
        parse_representation(ONE_ARC.replace('"1/5"', '"2"'))
    assert exc.value.code == "extent_out_of_range"
    assert "elements[0].extent" in exc.value.detail


@pytest.mark.parametrize("text,where", [
    ('{"kind":"semi_arc",', "line 1"),
    ('{"kind":"blob","elements":[]}', "kind"),
    ('{"kind":"arc","elements":[{"id":0,"r":1,"start":0.5,"extent":"1"}]}', "elements[0].start"),
    ('{"kind":"arc","elements":[{"id":0,"r":1,"start":"1/0","extent":"1"}]}', "elements[0].start"),
    ('{"kind":"arc","elements":[{"id":0,"r":1,"extent":"1"}]}', "elements[0]"),
    ('{"kind":"bar","elements":[{"id":0,"depth":"1","left":"0","right":"1"}]}', "elements[0].depth"),
])
def test_parse_errors(text, where):
    with pytest.raises(VisError) as exc:
        parse_representation(text)
    assert exc.value.code == "parse_error" and where in str(exc.value)


def test_parse_canonicalises():
    text = '{"elements":[{"extent":"2/6","start":"5/2","r":3,"id":1},{"id":0,"r":1,"start":"0","extent":"1"}],"kind":"arc"}'
    out = emit_representation(parse_representation(text))
    assert out == ('{"kind":"arc","elements":[{"id":0,"r":1,"start":"0","extent":"1"},'
                   '{"id":1,"r":3,"start":"1/2","extent":"1/3"}]}\n')


def test_roundtrip_fuzz(rng):
    for _ in range(100):
        n = rng.randint(1, 12)
        rep = [random_semi_arc, random_arcs, random_bars][rng.randrange(3)](rng, n)
        text = emit_representation(rep)
        assert parse_representation(text) == rep
        assert emit_representation(parse_representation(text)) == text


def test_bar_format():
    text = emit_representation(semi_bar([F(1, 2), 3]))
    assert text == ('{"kind":"semi_bar","elements":[{"id":0,"depth":1,"left":"0","right":"1/2"},'
                    '{"id":1,"depth":2,"left":"0","right":"3"}]}\n')


def test_emit_graph():
    assert emit_graph(Graph.complete(3)) == '{"n":3,"edges":[[0,1],[0,2],[1,2]]}\n'
    assert emit_graph(Graph.empty(2)) == '{"n":2,"edges":[]}\n'
    assert emit_graph(Graph.cycle(4), "dot") == (
        "graph G {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n"
    )
    assert parse_graph(emit_graph(Graph.cycle(5))) == Graph.cycle(5)
    with pytest.raises(VisError):
        emit_graph(Graph.cycle(4), "gml")
    with pytest.raises(VisError):
        parse_graph('{"n":2,"edges":[[0,2]]}')


def test_fmt_rational_and_decimal():
    assert fmt_rational(F(4, 2)) == "2" and fmt_rational(F(-1, 3)) == "-1/3"
    assert decimal12(F(1, 3)) == "0.333333333333"
    assert decimal12(F(2, 3)) == "0.666666666667"


def test_render_one_arc():
    svg = render_svg(semi_arc([F(1, 2)]))
    assert svg.count("<path") == 1 and svg.startswith("<svg")
    assert 'A 10 10 ' in svg


def test_render_complete_k0():
    rep = gen_complete_semiarc(0)
    svg = render_svg(rep)
    assert svg.count("<path") == 4
    for r in (10, 20, 30, 40):
        assert f"A {r} {r} " in svg
    assert render_svg(rep) == svg


def test_render_overlay_and_bars():
    rep = semi_arc([F(1, 5), F(3, 5), 1, F(7, 5), F(9, 5)])
    svg = render_svg(rep, (0, 2), 0)
    assert svg.count("<line") == 1  # a single degenerate region
    bsvg = render_svg(semi_bar([1, 2, 3]), (0, 2), 1)
    assert bsvg.count("<line") == 3 + 3


def test_cli_generate_compute_pipe():
    gen = subprocess.run([sys.executable, "-m", "viskit.shell", "generate", "complete-semiarc", "--k", "1"],
                         capture_output=True, text=True, check=True)
    comp = subprocess.run([sys.executable, "-m", "viskit.shell", "compute", "--k", "1"],
                          input=gen.stdout, capture_output=True, text=True, check=True)
    assert len(json.loads(comp.stdout)["edges"]) == 21
    assert comp.stderr == ""


def test_cli_compute_extras(tmp_path, capsys):
    path = tmp_path / "max5.json"
    path.write_text(emit_representation(semi_arc([F(1, 5), F(3, 5), 1, F(7, 5), F(9, 5)])))
    code, out, _ = run(capsys, "compute", "--input", str(path), "--center-split")
    assert code == 0
    data = json.loads(out)
    assert data["center_split"]["center_only"] == [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
    code, out, _ = run(capsys, "compute", "--input", str(path), "--format", "dot")
    assert code == 0 and out.startswith("graph G {")
    code, _, err = run(capsys, "compute", "--input", str(path), "--classify")
    assert code == 1 and "degenerate_input" in err
    code, _, _ = run(capsys, "compute", "--input", str(path), "--classify", "--format", "dot")
    assert code == 3


def test_cli_classify(tmp_path, capsys):
    path = tmp_path / "nested.json"
    from viskit.geometry import arcs
    path.write_text(emit_representation(arcs([(0, F(3, 2)), (F(1, 8), F(1, 2)), (F(1, 16), F(3, 2))])))
    code, out, _ = run(capsys, "compute", "--input", str(path), "--classify")
    data = json.loads(out)
    assert code == 0
    assert {"arc": 1, "positive": 1, "negative": 2} in data["classification"]["per_arc"]


def test_cli_random_csv(capsys):
    code, out, _ = run(capsys, "random", "semibar", "--n", "30", "--k", "1", "--trials", "50",
                       "--seed", "7", "--csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "trial,edges" and len(lines) == 52
    name, mean, kind, pq, dec = lines[-1].split(",")
    ref = expected_edges_semibar(30, 1)
    assert (name, kind, pq, dec) == ("mean_edges", "exact", f"{ref.numerator}/{ref.denominator}", decimal12(ref))
    values = [int(l.split(",")[1]) for l in lines[1:-1]]
    assert mean == decimal12(F(sum(values), 50))


def test_cli_random_semiarc_csv(capsys):
    code, out, _ = run(capsys, "random", "semiarc", "--n", "20", "--k", "0", "--trials", "5",
                       "--seed", "1", "--csv")
    lines = out.splitlines()
    assert lines[0] == "trial,edges,center_only"
    assert lines[-2].startswith("mean_edges,") and lines[-1].split(",")[2] == "upper_bound"


def test_cli_random_json_deterministic(capsys, monkeypatch):
    argv = ("random", "semiarc", "--n", "25", "--k", "1", "--trials", "30", "--seed", "3")
    _, first, _ = run(capsys, *argv)
    monkeypatch.setenv("VISKIT_THREADS", "2")
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["statistics"]["center_only"]["reference_kind"] == "upper_bound"


def test_cli_analyze(tmp_path, capsys):
    rep = tmp_path / "rep.json"
    rep.write_text(emit_representation(semi_arc([F(1, 5), F(3, 5), 1, F(7, 5), F(9, 5)])))
    code, out, _ = run(capsys, "analyze", "--input", str(rep))
    data = json.loads(out)
    assert code == 0 and data["edges"] == 9 and data["bound"]["within"] and data["planar"]
    assert data["witness"]["b_sequence"] == [0, 1, 2, 3, 4]
    bad = tmp_path / "k5.json"
    bad.write_text(emit_graph(Graph.complete(5)))
    code, out, err = run(capsys, "analyze", "--input", str(rep), "--graph", str(bad))
    assert code == 2 and "exceed" in err and json.loads(out)["bound"]["within"] is False
    small = tmp_path / "k3.json"
    small.write_text(emit_graph(Graph.complete(3)))
    code, _, _ = run(capsys, "analyze", "--input", str(rep), "--graph", str(small))
    assert code == 3


def test_cli_analyze_bars(tmp_path, capsys):
    rep = tmp_path / "bars.json"
    rep.write_text(emit_representation(random_bars(__import__("random").Random(1), 6)))
    code, out, _ = run(capsys, "analyze", "--input", str(rep), "--k", "1")
    assert code == 0 and "unavailable" in json.loads(out)["bound"]


def test_cli_search(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "--target", "c4", "--class", "arc", "--k", "0", "--budget", "3000")
    assert code == 0 and parse_representation(out).n == 4
    code, out, err = run(capsys, "search", "--target", "c4", "--class", "bar", "--k", "1", "--budget", "300")
    assert code == 2 and out == "" and "budget" in err
    target = tmp_path / "p3.json"
    target.write_text(emit_graph(Graph.path(3)))
    code, out, _ = run(capsys, "search", "--target", str(target), "--class", "semi-bar", "--k", "0")
    assert code == 0
    code, _, _ = run(capsys, "search", "--target", "c4", "--class", "disk")
    assert code == 3


def test_cli_decompose_and_render(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "semiarc-max", "--n", "10", "--k", "1")
    rep = tmp_path / "max.json"
    rep.write_text(out)
    code, out, _ = run(capsys, "decompose", "--input", str(rep), "--k", "1")
    data = json.loads(out)
    assert code == 0 and data["bound"] == 3 and sum(len(p["edges"]) for p in data["parts"]) == 37
    svg = tmp_path / "max.svg"
    assert run(capsys, "render", "--input", str(rep), "-o", str(svg), "--pair", "0", "9")[0] == 0
    first = svg.read_bytes()
    run(capsys, "render", "--input", str(rep), "-o", str(svg), "--pair", "0", "9")
    assert svg.read_bytes() == first and first.count(b"<path") == 10
    code, _, _ = run(capsys, "render", "--input", str(rep), "--pair", "0", "99")
    assert code == 1


def test_cli_generate_variants(capsys):
    assert run(capsys, "generate", "polygonal", "--n", "5")[0] == 0
    assert run(capsys, "generate", "arc-max", "--n", "8")[0] == 0
    code, out, _ = run(capsys, "generate", "named", "K5_arc")
    assert code == 0 and parse_representation(out).n == 5
    assert run(capsys, "generate", "named")[0] == 3
    assert run(capsys, "generate", "semiarc-max", "--n", "3", "--k", "1")[0] == 1
    assert run(capsys, "generate", "complete-semiarc", "--k", "1", "--epsilon", "1/60")[0] == 0
    assert run(capsys, "generate", "complete-semiarc", "--k", "1", "--epsilon", "x")[0] == 3


def test_cli_exit_codes(tmp_path, capsys):
    assert run(capsys, "compute", "--input", str(tmp_path / "missing.json"))[0] == 3
    assert run(capsys, "bogus")[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text(ONE_ARC.replace('"1/5"', '"2"'))
    code, out, err = run(capsys, "compute", "--input", str(bad))
    assert code == 1 and out == "" and "extent_out_of_range" in err
