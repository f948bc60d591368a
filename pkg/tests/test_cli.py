import json

import pytest

from superhopf import catalog
from superhopf.cli import OK, UNDETERMINED, USAGE, VIOLATION, UsageError, main, resolve, run
from superhopf.structures import load_file


def _json(capsys, argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_verify_all(capsys):
    code, doc = _json(capsys, ["verify", "--all"])
    assert code == OK
    assert len(doc["items"]) == 167 and doc["failures"] == 0
    assert {i["verdict"] for i in doc["items"]} == {"PASS"}


def test_antipode_census(capsys):
    code, doc = _json(capsys, ["antipode", "--census"])
    assert code == OK
    found = sorted(i["subject"] for i in doc["items"] if i["verdict"] == "Found")
    assert found == ["A_{11|2}^1", "A_{12|2}^1", "A_{1|1}^2", "A_{3|2}^1", "A_{3|2}^2",
                     "LambdaK"]


def test_iso_dual(capsys):
    code, doc = _json(capsys, ["iso", "H4", "dual(H2)"])
    assert code == OK
    assert doc["payload"]["result"]["status"] == "Iso"


def test_iso_nested_expression():
    rep, code = run(["iso", "tensor(GroupAlgebraZ2,LambdaK)", "H1"])
    assert code == OK and rep.payload["result"]["status"] == "Iso"


def test_resolve_errors():
    with pytest.raises(UsageError):
        resolve("tensor(H1)")
    with pytest.raises(UsageError):
        resolve("frobnicate(H1)")


def test_unknown_id_is_usage(capsys):
    assert main(["verify", "--id", "A_{99|9}^9"]) == USAGE
    assert main(["no-such-command"]) == USAGE
    code, doc = _json(capsys, ["fingerprint", "--id", "nope"])
    assert code == USAGE and doc["exit_code"] == USAGE


def test_strict_marks_grid_limited(capsys):
    assert main(["search-comult", "A3_{2|2}"]) == OK
    assert main(["--strict", "search-comult", "A3_{2|2}"]) == UNDETERMINED
    assert main(["search-comult", "A3_{2|2}", "--strict"]) == UNDETERMINED
    assert main(["--strict", "search-comult", "A3_{1|1}"]) == OK


def test_counits_and_connected(capsys):
    code, doc = _json(capsys, ["counits", "M2Graded"])
    assert code == OK and doc["payload"]["counits"] == []
    code, doc = _json(capsys, ["connected", "--odd", "2"])
    assert code == OK
    assert "Nonexistent" in json.dumps(doc)


def test_export_import_roundtrip(tmp_path, capsys):
    out = tmp_path / "h4.json"
    assert main(["export", "--id", "H4", "--out", str(out)]) == OK
    assert load_file(out).id == "A_{3|2}^1"
    assert main(["import", str(out)]) == OK
    bad = tmp_path / "bad.json"
    bad.write_text('{"id": "x"}')
    assert main(["import", str(bad)]) == USAGE


def test_construct_cop(tmp_path):
    out = tmp_path / "cop.json"
    assert main(["construct", "cop", "--id", "A_{2|3}^1", "--out", str(out)]) == OK
    assert load_file(out).same_structure(catalog.get("A_{2|3}^3").data)


def test_json_is_stable(capsys):
    first = _json(capsys, ["fingerprint", "--id", "H2"])
    second = _json(capsys, ["fingerprint", "--id", "H2"])
    assert first == second


def test_distinct_reports_isomorphic_pairs(capsys):
    code, doc = _json(capsys, ["distinct"])
    assert code == VIOLATION
    assert doc["failures"] == 24
    assert doc["undetermined"] == 53
