import json

import pytest

from mincoprime.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_exact(capsys):
    code, out, _ = run(capsys, "compute", "join(P(7),P(7))", "--method", "exact", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 19 and doc["certified"] and doc["provenance"] == "exact-search"


def test_compute_formula(capsys):
    code, out, _ = run(capsys, "compute", "corona(K(17),E(2))", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 53 and doc["provenance"] == "formula"
    assert len(doc["labels"]) == 51


def test_window_goes_to_exact_search(capsys):
    code, out, _ = run(capsys, "compute", "join(P(8),P(6))", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 19 and doc["provenance"] == "exact-search"
    code, out, _ = run(capsys, "compute", "join(P(8),P(6))", "--method", "formula")
    assert code == 1 and "exceptional window" in out


def test_compute_construct(capsys):
    code, out, _ = run(capsys, "compute", "Kbip(20,5)", "--method", "construct", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "upper-bound" and doc["value"] == 29 and not doc["certified"]
    code, out, _ = run(capsys, "compute", "join(P(5),C(29))", "--method", "construct", "--format", "json")
    assert json.loads(out)["value"] == 39


def test_verify(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"graph": "P(3)", "labels": [2, 3, 2], "max": 3}))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and "share label 2" in out
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"graph": "edges", "n": 3, "edges": [[0, 1], [1, 2]], "labels": [2, 3, 4], "max": 4}))
    code, out, _ = run(capsys, "verify", str(good))
    assert code == 0 and out.startswith("valid")
    wrong_max = tmp_path / "wrong.json"
    wrong_max.write_text(json.dumps({"graph": "K(2)", "labels": [1, 2], "max": 5}))
    assert run(capsys, "verify", str(wrong_max))[0] == 1
    junk = tmp_path / "junk.json"
    junk.write_text("{")
    assert run(capsys, "verify", str(junk))[0] == 2


def test_edge_list_input(capsys, tmp_path):
    f = tmp_path / "k4.txt"
    f.write_text("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "exact", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["value"] == 5


def test_exact_inconclusive(capsys):
    code, out, _ = run(capsys, "exact", "join(P(10),P(6))", "--node-limit", "100")
    assert code == 1 and "inconclusive" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "compute", "join(P(10),P(6)")
    assert code == 2 and "offset 15" in err
    assert run(capsys, "compute", "C(2)")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["exact", "P(3)", "--node-limit", "0"])
    assert info.value.code == 2


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "join(P(7),P(5))", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["alpha"] == 4 and doc["independence_bound"] == 15 == doc["formula"]
    assert doc["upper_bound"] == 31


def test_lemma11(capsys):
    code, out, _ = run(capsys, "lemma11", "--x-max", "1331", "--format", "json")
    assert code == 0 and json.loads(out)["failures"] == []


def test_tables(capsys):
    code, out, _ = run(capsys, "table", "conjecture1", "--m-max", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "family,m,n,pr,provenance,certified,seconds"
    code, out, _ = run(capsys, "table", "pathjoin", "--n-min", "7", "--n-max", "7", "--m-min", "9", "--m-max", "9")
    assert code == 0 and "pr=   22" in out and "*" in out
    code, out, _ = run(capsys, "table", "corona", "--n-max", "3", "--m-max", "1", "--format", "json")
    assert len(json.loads(out)["rows"]) == 3


def test_random_json_reproducible(capsys):
    args = ("random", "--n", "8", "--p", "0.5", "--trials", "4", "--seed", "3", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert json.loads(first)["aggregates"]["solved"] == 4
