import json
import subprocess
import sys

import networkx as nx
import pytest

from planturan.cli import main, parse_construct_spec, run
from planturan.graph import complete_graph, from_graph6, to_graph6


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_construct_counterexample(capsys):
    code, m = call(capsys, "construct", "counterexample-ck", "--k", "13", "--n", "390")
    assert code == 0
    res = m["results"]
    g = from_graph6(res["graph6"])
    assert g.n == 390 and res["expected_edges"] == 1078 == g.edge_count()
    assert m["digests"] == [res["graph6"]]
    assert m["citations"] == [res["citation"]]


def test_construct_witness(capsys):
    code, m = call(capsys, "construct", "witness", "--name", "c8-plus-chords")
    g = from_graph6(m["results"]["graph6"])
    assert code == 0 and (g.n, g.edge_count()) == (8, 11)


def test_construct_T3_is_triangle(capsys):
    code, m = call(capsys, "construct", "T", "--m", "3")
    h = nx.from_graph6_bytes(m["results"]["graph6"].encode())
    assert nx.is_isomorphic(h, nx.complete_graph(3))


def test_construct_glue_with_base(capsys):
    base = to_graph6(from_graph6("D]o"))
    code, m = call(capsys, "construct", "lemma31-glue", "--k", "5", "--base", base)
    assert code == 0 and m["results"]["edges"] == 6 + 9


def test_construct_dot(capsys, tmp_path):
    path = tmp_path / "t.dot"
    call(capsys, "construct", "T", "--m", "5", "--dot", str(path))
    assert path.read_text().count("--") == 9


def test_verify_construct(capsys):
    code, m = call(capsys, "verify", "--construct", "counterexample-ck k=13 n=390", "--family", "cycle", "--k", "13")
    assert code == 0
    assert m["results"]["free"] is True and m["results"]["planar"] is True


def test_verify_k4_contains_theta(capsys):
    code, m = call(capsys, "verify", "--g6", to_graph6(complete_graph(4)), "--family", "theta", "--k", "4")
    assert code == 1
    assert m["results"]["free"] is False
    assert m["results"]["witness_valid"] is True
    code, m = call(capsys, "verify", "--g6", to_graph6(complete_graph(4)), "--family", "theta", "--k", "4",
                   "--expect", "contains")
    assert code == 0


def test_verify_flags_nonplanar(capsys):
    code, m = call(capsys, "verify", "--g6", to_graph6(complete_graph(5)), "--family", "cycle", "--k", "3")
    assert code == 1 and m["results"]["planar"] is False


def test_verify_circumference(capsys):
    code, m = call(capsys, "verify", "--construct", "T m=7", "--family", "circumference")
    assert m["results"]["circumference"] == 7


def test_bounds(capsys):
    code, m = call(capsys, "bounds", "--id", "thm21-exact", "--k", "13", "--n", "390")
    assert code == 0 and m["results"]["value"] == "1078" and m["results"]["exact"]
    code, m = call(capsys, "bounds", "--id", "ghosh_conjecture_rhs", "--k", "13", "--n", "390")
    assert m["results"]["value"] == "13956/13"


def test_bounds_compare_csv(capsys):
    code, m = call(capsys, "bounds", "compare", "--k", "13..25", "--at-threshold", "--format", "csv")
    assert code == 0
    lines = m["results"]["csv"].strip().splitlines()
    assert len(lines) == 14
    header = lines[0].split(",")
    margins = [row.split(",")[header.index("margin")] for row in lines[1:]]
    from fractions import Fraction
    assert all(Fraction(x) > 0 for x in margins)


def test_bounds_approximate_flagged(capsys):
    code, m = call(capsys, "bounds", "--id", "cranston_conj_rhs", "--k", "13", "--n", "100", "--D", "5")
    assert m["results"]["exact"] is False


def test_extremal(capsys):
    code, m = call(capsys, "extremal", "--n", "8", "--family", "cycle", "--k", "4")
    assert code == 0 and m["results"]["value"] == 11
    code, m = call(capsys, "extremal", "--n", "5", "--family", "cycle", "--k", "4", "--expect", "7")
    assert code == 1


def test_extremal_cap_override_warns(capsys, caplog):
    code, m = call(capsys, "extremal", "--n", "5", "--family", "cycle", "--k", "4", "--cap-override", "12")
    assert code == 0
    assert "cap raised" in caplog.text


def test_structured_errors(capsys):
    code, m = call(capsys, "construct", "nope")
    assert code == 2 and m["ok"] is False and m["error"] == "UsageError"
    code, m = call(capsys, "bounds", "--id", "dowden_c5", "--n", "3")
    assert code == 2 and m["error"] == "BoundError"
    code, m = call(capsys, "extremal", "--n", "12", "--family", "cycle", "--k", "4")
    assert code == 2


def test_parse_spec():
    assert parse_construct_spec("counterexample-ck k=13 n=390") == ("counterexample-ck", {"k": "13", "n": "390"})
    with pytest.raises(Exception):
        parse_construct_spec("T m")


@pytest.mark.parametrize("argv", [
    ["construct", "counterexample-ck", "--k", "11", "--n", "40"],
    ["bounds", "compare", "--k", "13..15", "--at-threshold"],
    ["extremal", "--n", "6", "--family", "theta", "--k", "4"],
    ["verify", "--construct", "witness name=H-star-12", "--family", "cycle", "--k", "4"],
])
def test_repro_is_byte_identical(capsys, tmp_path, argv):
    path = tmp_path / "m.json"
    code = main(["--out", str(path)] + argv)
    capsys.readouterr()
    assert code == 0
    code, m = call(capsys, "repro", str(path))
    assert code == 0 and m["results"]["identical"] is True
    first = json.loads(path.read_text())
    assert json.dumps(run(first["argv"])["results"], sort_keys=True) == json.dumps(first["results"], sort_keys=True)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "planturan", "construct", "T", "--m", "4"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["results"]["edges"] == 6
