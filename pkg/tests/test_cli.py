import csv
import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hodge_degrees.cli import OutputRecord, main
from hodge_degrees.tautring import DivisorClass


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lambda1_text(capsys):
    assert run(capsys, "lambda1", "--d", "5", "--m", "1,4,2,3")[:2] == (0, "4/25\n")
    assert run(capsys, "lambda1", "--d", "2", "--m", "1,1,1,1")[:2] == (0, "1/4\n")


def test_lambda1_invalid(capsys):
    code, out, err = run(capsys, "lambda1", "--d", "5", "--m", "1,1,1,1")
    assert code == 2 and out == "" and "mod 5" in err


def test_lambda1_reduces_with_warning(capsys):
    code, out, err = run(capsys, "lambda1", "--d", "5", "--m", "6,4,2,3")
    assert code == 0 and out == "4/25\n" and "warning" in err


def test_lambda1_json_and_csv(capsys):
    code, out, _ = run(capsys, "lambda1", "--d", "5", "--m", "1,4,2,3", "--json")
    rec = json.loads(out)
    assert rec["value"] == "4/25" and rec["connected"] is True and rec["decimal"] == "0.16"
    code, out, _ = run(capsys, "lambda1", "--d", "5", "--m", "1,4,2,3", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["d", "m", "e", "quantity", "num", "den", "decimal", "connected"]
    assert rows[1] == ["5", "1;4;2;3", "", "lambda1", "4", "25", "0.16", "true"]


def test_lambda1e_single(capsys):
    assert run(capsys, "lambda1e", "--d", "5", "--e", "3", "--m", "3,4,4,4")[:2] == (0, "1/25\n")
    assert run(capsys, "lambda1e", "--d", "3", "--e", "0", "--m", "1,1,2,2")[:2] == (0, "0\n")


def test_lambda1e_all(capsys):
    code, out, _ = run(capsys, "lambda1e", "--d", "5", "--all-e", "--m", "1,4,2,3", "--json")
    recs = json.loads(out)
    assert [(r["e"], r["value"]) for r in recs[:5]] == [(0, "0"), (1, "1/25"), (2, "1/25"), (3, "1/25"), (4, "1/25")]
    assert recs[5]["value"] == "4/25" and recs[5]["provenance"] == "eigen-sum"
    assert recs[6]["value"] == "4/25"
    code, out, _ = run(capsys, "lambda1e", "--d", "5", "--all-e", "--m", "1,4,2,3")
    assert code == 0 and "sum  4/25  lambda1 4/25  ok" in out


def test_lambda1e_bad_e(capsys):
    assert run(capsys, "lambda1e", "--d", "5", "--e", "5", "--m", "1,4,2,3")[0] == 2
    assert run(capsys, "lambda1e", "--d", "4", "--e", "1", "--m", "2,2,2,2")[0] == 2


def test_graph_formula_canonical_text(capsys):
    code, out, _ = run(capsys, "graph-formula", "--d", "2", "--m", "1,1,1,1", "--canonical")
    assert code == 0
    lines = [l.split() for l in out.splitlines()[1:]]
    assert ["1/6", "kappa1"] in lines
    assert sum(1 for c, s in lines if s.startswith("psi") and c == "-1/24") == 4
    assert sum(1 for c, s in lines if s.startswith("D{") and c == "1/6") == 3


def test_graph_formula_json(capsys):
    code, out, _ = run(capsys, "graph-formula", "--d", "3", "--m", "1,1,1,1,2", "--json")
    cls = DivisorClass.from_json(out)
    assert (cls.n, cls.d) == (5, 3)
    assert json.loads(cls.to_json()) == json.loads(out)


def test_graph_formula_question(capsys):
    code, out, _ = run(capsys, "graph-formula", "--d", "5", "--m", "1,4,2,3", "--e", "1", "--json")
    cls = DivisorClass.from_json(out)
    from hodge_degrees.tautring import evaluate_degree_4pt

    assert evaluate_degree_4pt(cls) == Fraction(1, 25)
    assert run(capsys, "graph-formula", "--d", "3", "--m", "1,1,1,1,2", "--e", "1")[0] == 4


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--d", "6", "--m", "2,4,3,3", "--json")
    obj = json.loads(out)
    assert obj["genus"] == 2 and obj["q"] == [2, 2, 3, 3]
    code, out, _ = run(capsys, "info", "--d", "5", "--m", "1,4,2,3", "--json")
    obj = json.loads(out)
    assert obj["genus"] == 4 and obj["ranks"] == [0, 1, 1, 1, 1]
    code, out, _ = run(capsys, "info", "--d", "1", "--m", "0,0,0", "--json")
    obj = json.loads(out)
    assert obj["genus"] == 0 and obj["dimension"] == 0
    code, out, _ = run(capsys, "info", "--d", "6", "--m", "2,4,3,3")
    assert "genus      2" in out


def test_verify_suites(capsys):
    for suite, extra in (("identity", []), ("localization", []), ("question", []), ("graph", ["--nmax", "5"])):
        code, out, _ = run(capsys, "verify", suite, "--dmax", "5", *extra)
        assert code == 0 and out.startswith(f"verify {suite}: PASS")


def test_verify_jobs_is_deterministic(capsys):
    code, single, _ = run(capsys, "verify", "graph", "--dmax", "4", "--nmax", "5", "--json")
    code2, multi, _ = run(capsys, "verify", "graph", "--dmax", "4", "--nmax", "5", "--json", "--jobs", "2")
    assert code == code2 == 0 and single == multi


def test_verify_reports_failures(capsys, monkeypatch):
    import hodge_degrees.verify as verify

    def broken(datum):
        return 1, [{"d": datum.d, "m": list(datum.m), "check": "forced"}], 0

    monkeypatch.setitem(verify.SUITES, "identity", broken)
    code, out, _ = run(capsys, "verify", "identity", "--dmax", "3")
    assert code == 5 and "FAIL" in out and "forced" in out


def test_jobs_env_default(monkeypatch):
    from hodge_degrees.cli import build_parser

    monkeypatch.setenv("HODGE_DEGREES_JOBS", "3")
    args = build_parser().parse_args(["verify", "identity", "--dmax", "2"])
    assert args.jobs == 3


@given(
    st.integers(1, 50),
    st.lists(st.integers(0, 49), min_size=3, max_size=7),
    st.booleans(),
    st.fractions(),
    st.one_of(st.none(), st.integers(0, 49)),
)
def test_output_record_roundtrip(d, m, connected, value, e):
    rec = OutputRecord(d, tuple(m), connected, "lambda1e", value, e, "localization")
    assert OutputRecord.from_dict(json.loads(json.dumps(rec.to_dict()))) == rec
