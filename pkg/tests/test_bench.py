import json

import pytest

from dyncolor.bench import (ContractViolation, InvalidSpec, ParseError, UnsupportedEvent,
                            dumps, generate, parse_trace, run, run_adversary_explicit2)
from dyncolor.bench.cli import main
from dyncolor.bench.generators import spec_params
from dyncolor.bench.trace import ColorQuery, Insert
from dyncolor.oracle import OracleGraph, is_forest, max_density_exact


def test_parse_basic_events():
    t = parse_trace("N 4\nI 0 1\nC 3\nD 0 1\nK 1 2\n")
    assert t.events[0] == Insert(0, 1)
    assert t.events[1] == ColorQuery(3)
    assert [e.kind for e in t.events] == ["I", "C", "D", "K"]
    assert t.events[2].line == 4


@pytest.mark.parametrize("text", ["N 4\nI 0\n", "I 0 1\n", "N 4\nX 1 2\n", "N 4\nI 0 9\n",
                                  "N 4\nI 1 1\n", "N 4\nI a b\n", "", "N 2\nN 2\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_trace(text)


def test_parse_error_carries_line():
    with pytest.raises(ParseError) as info:
        parse_trace("N 4\n# ok\nI 0\n")
    assert info.value.line == 3


def test_round_trip_bit_exact():
    text = "N 5\n# header comment\nI 0 1\n\nI 1 2\nC 4\n   # indented\nD 0 1\nK 2 3\n"
    assert dumps(parse_trace(text)) == text
    t = generate("random-graph(20,15,4,0.3,200)", 9)
    assert parse_trace(dumps(t)) == t


def test_random_forest_spec():
    t = generate("random-forest(8,7)", 3)
    assert len(t) == 7 and all(e.kind == "I" for e in t)
    assert is_forest(8, [(e.u, e.v) for e in t])


def test_balanced_paths():
    t = generate("balanced-paths(8)")
    assert len(t) == 7
    assert is_forest(8, [(e.u, e.v) for e in t])


def test_generators_deterministic():
    for spec in ("random-forest(30,20)", "random-graph(30,40,5,0.2,500)",
                 "bounded-arboricity(n=30, gamma=2, churn=0.3, updates=500)"):
        assert generate(spec, 42) == generate(spec, 42)
    assert generate("random-forest(30,20)", 1) != generate("random-forest(30,20)", 2)


@pytest.mark.parametrize("spec", ["nope(3)", "random-forest(8,9)", "random-forest", "balanced-paths(6)",
                                  "random-graph(8,x,2)", "random-graph(8,4,2,1.5)",
                                  "random-forest(n=3,bogus=1)"])
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpec):
        generate(spec, 0)


def test_spec_params():
    assert spec_params("random-graph(10, 5, dcap=3)") == {"n": 10, "mcap": 5, "dcap": 3}


def test_random_graph_respects_caps():
    t = generate("random-graph(40,30,4,0.3,3000)", 5)
    live = OracleGraph(40)
    for e in t:
        if e.kind == "I":
            assert (e.u, e.v) not in live
            live.add(e.u, e.v)
        else:
            live.remove(e.u, e.v)
        assert len(live) <= 30
        assert max(len(a) for a in live.adj) <= 4


@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_bounded_arboricity_exact_density(gamma):
    n = 12
    t = generate(f"bounded-arboricity({n},{gamma},0.25,400)", gamma)
    live = OracleGraph(n)
    for i, e in enumerate(t):
        if e.kind == "I":
            assert (e.u, e.v) not in live
            live.add(e.u, e.v)
        else:
            live.remove(e.u, e.v)
        if i % 40 == 0:
            assert max_density_exact(n, live.edges()) <= gamma


def test_adversary_small():
    total, trace = run_adversary_explicit2(8)
    assert total == 12
    assert trace.counts()["I"] == 7


def test_delete_on_incremental_engine_unsupported():
    t = parse_trace("N 3\nI 0 1\nD 0 1\n")
    with pytest.raises(UnsupportedEvent):
        run("inclog", t)
    with pytest.raises(UnsupportedEvent):
        run("delta1", parse_trace("N 3\nK 0 1\n"))


def test_full2_rejections_match_oracle():
    t = generate("random-graph(40,60,6,0.3,2000)", 11)
    report = run("full2", t, "oracle")
    assert report.violations == 0
    odd = 0
    g = OracleGraph(40)
    rejected = set()
    for e in t:
        key = (min(e.u, e.v), max(e.u, e.v))
        if e.kind == "I":
            if g.closes_odd_cycle(e.u, e.v):
                odd += 1
                rejected.add(key)
            else:
                g.add(e.u, e.v)
        elif key in rejected:
            rejected.discard(key)
        else:
            g.remove(e.u, e.v)
    assert report.rejections == odd
    assert report.observable_flips["delete"] == 0


def test_report_deterministic_and_replayable(tmp_path):
    t = generate("random-graph(30,40,5,0.3,800)", 4)
    a = run("delta1", t)
    path = tmp_path / "t.trace"
    path.write_text(dumps(t))
    b = run("delta1", parse_trace(path.read_text()))
    assert a.deterministic_dict() == b.deterministic_dict()
    assert json.loads(a.to_json())["engine"] == "delta1"


def test_conn_queries_through_runner():
    text = "N 5\nI 0 1\nI 1 2\nK 0 2\nK 0 4\nC 3\n"
    r = run("full2", parse_trace(text), "oracle")
    assert r.violations == 0 and r.queries == 3


def test_contract_violation_on_bad_delete():
    with pytest.raises(ContractViolation):
        run("delta1", parse_trace("N 3\nD 0 1\n"))


def test_cli_end_to_end(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["--engine", "arb", "--gen", "bounded-arboricity(32,2,0.3,500)",
                 "--seed", "7", "--check", "oracle", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["violations"] == 0 and report["events"]["I"] > 0
    trace = tmp_path / "t.trace"
    trace.write_text("N 4\nI 0 1\nI 1 2\n")
    assert main(["--engine", "inclog", "--trace", str(trace)]) == 0
    assert json.loads(capsys.readouterr().out)["recolorings"] >= 1


def test_cli_exit_codes(tmp_path):
    bad = tmp_path / "bad.trace"
    bad.write_text("I 0 1\n")
    assert main(["--engine", "full2", "--trace", str(bad)]) == 2
    assert main(["--engine", "full2", "--gen", "nope(1)"]) == 2
    assert main(["--engine", "full2", "--gen", "random-forest(8,7)", "--n", "4"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["--engine", "nope", "--gen", "random-forest(8,7)"])
    assert info.value.code == 2
    dele = tmp_path / "d.trace"
    dele.write_text("N 3\nI 0 1\nD 0 1\n")
    assert main(["--engine", "inc2", "--trace", str(dele)]) == 1
    assert main(["--engine", "delta1", "--trace", str(dele), "--mcap", "1", "--dcap", "1"]) == 0
