import io
import json
import subprocess
import sys

import pytest

import affgrowth.cli as cli
from affgrowth.cli import run
from affgrowth.errors import InvariantError

GROWTH_TYPE = "f1,f1,f1,d1,f1,d1,d1,d1"
SQUARE_PATH = "[[0,0],[1,0],[1,1],[1,0],[0,0]]"


def call(*argv, stdin=""):
    code, out = run(list(argv), io.StringIO(stdin))
    return code, out


def call_json(*argv, stdin=""):
    code, out = call(*argv, stdin=stdin)
    doc = json.loads(out)
    assert doc["schema"] == 1
    return code, doc


def test_count_all_methods_agree():
    code, doc = call_json("count", "--type", GROWTH_TYPE, "--m", "4", "--method", "all")
    assert code == 0 and doc["agreement"] is True
    assert set(doc["counts"].values()) == {24}


@pytest.mark.parametrize("method", ["paths", "hives", "kostka"])
def test_count_single_method(method):
    code, doc = call_json("count", "--type", "f1,f1,d1,d1", "--m", "2", "--method", method)
    assert code == 0 and doc["counts"] == {method: 2}


def test_rs_reports_tableaux_and_embedding():
    code, doc = call_json("rs", "312")
    assert code == 0
    assert doc["P"] == [[1, 2], [3]] and doc["Q"] == [[1, 3], [2]]
    assert doc["fpf"] == [5, 4, 6, 2, 1, 3]
    code, again = call_json("rs", "--embedded", "5,4,6,2,1,3")
    assert again["sigma"] == [3, 1, 2] and again["diagram"] == doc["diagram"]


def test_enumerate_smallest_type():
    code, doc = call_json("enumerate", "--type", "f1,d1", "--m", "1")
    assert code == 0 and doc["count"] == 1 and len(doc["diagrams"]) == 1


def test_fill_then_verify_and_render():
    code, filled = call("fill", "--type", "f1,f1,d1,d1", "--m", "2", "--path", SQUARE_PATH)
    assert code == 0
    code, doc = call_json("verify", stdin=filled)
    assert code == 0 and doc["valid"]
    code, text = call("render", stdin=filled)
    assert code == 0 and "X" in text
    code, svg = call("render", "--format", "svg", stdin=filled)
    assert svg.startswith("<svg")


def test_every_enumerated_diagram_verifies_through_cli():
    _, doc = call_json("enumerate", "--type", "f1,d1,f1,d1", "--m", "2")
    for d in doc["diagrams"]:
        code, res = call_json("verify", stdin=json.dumps(d))
        assert code == 0 and res["valid"]


def test_verify_flags_a_broken_diagram():
    _, filled = call("fill", "--type", "f1,f1,d1,d1", "--m", "2", "--path", SQUARE_PATH)
    d = json.loads(filled)
    d["lines"][1][2] = [2, 0]
    code, doc = call_json("verify", stdin=json.dumps(d))
    assert code == 1 and not doc["valid"] and doc["violations"]


def test_marks_window():
    _, out = call("rs", "312")
    diagram = json.loads(out)["diagram"]
    code, doc = call_json("marks", stdin=json.dumps(diagram))
    assert code == 0 and doc["reduced"] == [5, 4, 6, 2, 1, 3]


def test_hive_json_and_ascii():
    code, doc = call_json("hive", "--type", "f1,f1,d1,d1", "--m", "2", "--path", SQUARE_PATH)
    assert code == 0 and doc["n"] == 4 and doc["m"] == 2
    code, text = call("hive", "--type", "f1,f1,d1,d1", "--m", "2", "--path", SQUARE_PATH, "--format", "ascii")
    assert text.count("face") == 4


def test_osc_both_directions():
    _, doc = call_json("osc", "--fpf", "2143")
    assert doc["osc"] == [[], [1], [], [1], []]
    _, back = call_json("osc", stdin=json.dumps(doc["osc"]))
    assert back["fpf"] == [2, 1, 4, 3]


def test_knuth_both_directions():
    M = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 2], [0, 0, 2, 0]]
    _, doc = call_json("knuth", "--matrix", json.dumps(M))
    assert doc["osc"] == [[], [1], [], [1, 1], []]
    _, back = call_json("knuth", "--osc", json.dumps(doc["osc"]))
    assert back["matrix"] == M


def test_promote_cycles_a_rectangle():
    _, doc = call_json("promote", "--tableau", "[[1,2],[3,4]]", "--n", "4", "--times", "4")
    assert doc["tableau"] == [[1, 2], [3, 4]]
    _, ev = call_json("promote", "--tableau", "[[1,2],[3,4]]", "--n", "4", "--op", "evacuation")
    assert ev["tableau"] == [[1, 2], [3, 4]]


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (("verify",), "not json"),
        (("fill", "--type", "f1,d1", "--m", "1", "--path", "[[0],[2],[0]]"), ""),
        (("fill", "--type", "x1,d1", "--m", "1", "--path", "[[0],[1],[0]]"), ""),
        (("rs", "12a"), ""),
        (("osc", "--fpf", "1234"), ""),
        (("knuth", "--matrix", "[[0,1],[0,0]]"), ""),
        (("promote", "--tableau", "[[2,1]]", "--n", "3"), ""),
        (("marks",), json.dumps({"type": {"labels": ["f2", "d1", "d1"], "m": 1}, "lines": []})),
    ],
)
def test_validation_errors_exit_one(argv, stdin):
    code, doc = call_json(*argv, stdin=stdin)
    assert code == 1 and doc["error"] == "validation" and doc["message"]


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "affgrowth.cli", "count", "--type", "f1,d1", "--m", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["counts"]["kostka"] == 1


def test_disagreement_and_invariant_failures_exit_two(monkeypatch):
    monkeypatch.setattr(cli.tb, "lr_via_kostka", lambda labels, m: 99)
    code, doc = call_json("count", "--type", "f1,d1", "--m", "1")
    assert code == 2 and doc["agreement"] is False

    def boom(*_):
        raise InvariantError("forced")

    monkeypatch.setattr(cli.sc, "enumerate_diagrams", boom)
    code, doc = call_json("enumerate", "--type", "f1,d1", "--m", "1")
    assert code == 2 and doc["error"] == "invariant"
