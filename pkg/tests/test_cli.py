from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from liecomm import cli, corpus
from liecomm.catalog import list_families, make, parse_family
from liecomm.errors import ParseError
from liecomm.gfq import GF, field_create
from liecomm.serialize import emit, load, parse

CATALOG = ["abelian:3", "heisenberg:1", "heisenberg:2", "affine2", "l55", "l57", "l67_2", "h:1+a:2"]


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def emitted(tmp_path, capsys):
    def _emit(family, q=2):
        path = tmp_path / f"{family.replace(':', '_').replace('+', '_')}_{q}.json"
        code, _, _ = run(capsys, "catalog", "emit", family, "--q", q, "--out", path)
        assert code == 0
        return path

    return _emit


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


# -- file format ------------------------------------------------------------------


@pytest.mark.parametrize("family", CATALOG)
@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_round_trip_byte_identical(family, q):
    text = emit(make(parse_family(family, GF(q))))
    assert emit(parse(text)) == text
    assert text.endswith("\n")


def test_round_trip_through_cli(emitted, capsys):
    for family in CATALOG:
        path = emitted(family, 4)
        first = path.read_bytes()
        code, out, _ = run(capsys, "catalog", "emit", family, "--q", 4)
        assert code == 0 and out.encode() == first
        assert emit(load(path)).encode() == first


def test_golden_h1():
    text = emit(make(parse_family("heisenberg:1", GF(2))))
    assert json.loads(text) == {
        "brackets": [{"i": 1, "j": 2, "terms": [{"c": 1, "k": 3}]}],
        "dim": 3,
        "field": {"k": 1, "p": 2},
        "name": "H(1)",
    }


def test_extension_field_modulus_serialized():
    doc = json.loads(emit(make(parse_family("affine2", GF(4)))))
    assert doc["field"] == {"k": 2, "modulus": [1, 1, 1], "p": 2}
    other = field_create(2, 3, [1, 0, 1, 1])
    doc = json.loads(emit(make(parse_family("affine2", other))))
    assert doc["field"]["modulus"] == [1, 0, 1, 1]
    assert load_field(doc) == other


def load_field(doc):
    return parse(json.dumps(doc)).field


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"dim": 2}',
        '{"field": {"p": 2}, "dim": "two"}',
        '{"field": {"p": 2}, "dim": 2, "brackets": {}}',
        '{"field": {"p": 2}, "dim": 2, "brackets": [{"i": 1, "j": 2}]}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


# -- validate ---------------------------------------------------------------------


def test_validate_ok(emitted, capsys):
    code, out, _ = run(capsys, "validate", emitted("heisenberg:2"))
    assert code == 0 and out.startswith("valid")


def test_validate_jacobi(tmp_path, capsys):
    doc = {
        "field": {"p": 3, "k": 1},
        "dim": 3,
        "brackets": [
            {"i": 1, "j": 2, "terms": [{"k": 3, "c": 1}]},
            {"i": 1, "j": 3, "terms": [{"k": 1, "c": 1}]},
            {"i": 2, "j": 3, "terms": [{"k": 2, "c": 1}]},
        ],
    }
    path = write(tmp_path, "bad.json", doc)
    code, out, _ = run(capsys, "validate", path)
    assert code == 1
    assert "JacobiViolation at triple (1,2,3)" in out
    code, out, _ = run(capsys, "validate", path, "--format", "json")
    row = json.loads(out)
    assert row["triple"] == [1, 2, 3] and row["axiom"] == "jacobi" and row["valid"] is False
    # the same table is a Lie algebra in characteristic 2
    doc["field"] = {"p": 2, "k": 1}
    assert run(capsys, "validate", write(tmp_path, "ok.json", doc))[0] == 0


def test_validate_input_errors(tmp_path, capsys):
    dup = {
        "field": {"p": 2},
        "dim": 3,
        "brackets": [
            {"i": 1, "j": 2, "terms": [{"k": 3, "c": 1}]},
            {"i": 1, "j": 2, "terms": [{"k": 3, "c": 1}]},
        ],
    }
    code, _, err = run(capsys, "validate", write(tmp_path, "dup.json", dup))
    assert code == 2 and "DuplicateEntry" in err
    red = {"field": {"p": 2, "k": 2, "modulus": [1, 0, 1]}, "dim": 1}
    code, _, err = run(capsys, "validate", write(tmp_path, "red.json", red))
    assert code == 2 and "ReducibleModulus" in err
    code, _, err = run(capsys, "validate", tmp_path / "missing.json")
    assert code == 2 and "ParseError" in err


# -- info / degree / sweep ----------------------------------------------------------


def test_info(emitted, capsys):
    code, out, _ = run(capsys, "info", emitted("affine2"))
    assert code == 0
    assert "summary: non-nilpotent, Z dim 0, L² dim 1, breadth 1" in out
    code, out, _ = run(capsys, "info", emitted("heisenberg:2", 3))
    assert "summary: class 2, Z dim 1, L² dim 1, breadth 1" in out
    assert "order: 3^5 = 243" in out
    code, out, _ = run(capsys, "info", emitted("abelian:4"))
    assert "summary: class 1, abelian" in out
    code, out, _ = run(capsys, "info", emitted("l57"), "--format", "json")
    row = json.loads(out)
    assert row["nilpotency_class"] == 4 and row["breadth"] == 3


def test_degree(emitted, capsys):
    code, out, _ = run(capsys, "degree", emitted("heisenberg:1"))
    assert code == 0 and "degree: 5/8" in out
    code, out, _ = run(capsys, "degree", emitted("l55", 3), "--oracle")
    assert code == 0 and "degree: 35/243" in out and "oracle: naive pairs agree" in out
    code, out, _ = run(capsys, "degree", emitted("abelian:6"), "--method", "rank")
    assert "degree: 1/1" in out


def test_degree_json_has_no_floats(emitted, capsys):
    for family in CATALOG:
        code, out, _ = run(capsys, "degree", emitted(family), "--format", "json", "--oracle")
        row = json.loads(out)

        def walk(v):
            assert not isinstance(v, float), row
            if isinstance(v, dict):
                for x in v.values():
                    walk(x)

        walk(row)
        num, den = row["degree"].split("/")
        assert int(num) >= 0 and int(den) > 0


def test_degree_cap(emitted, capsys):
    code, _, err = run(capsys, "degree", emitted("heisenberg:2", 3), "--cap", "10", "--method", "rank")
    assert code == 2 and "EnumerationCapExceeded" in err


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "heisenberg:1", "--q", "2,3,4,5", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["degree"] for r in rows] == ["5/8", "11/27", "19/64", "29/125"]
    assert all(r["match"] for r in rows)
    code, out, _ = run(capsys, "sweep", "l57", "--q", "2", "--q", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["degree"] for r in rows] == ["11/32", "35/243"]
    code, out, _ = run(capsys, "sweep", "abelian:3", "--q", "7")
    assert code == 0 and "1/1" in out


def test_sweep_bad_q(capsys):
    code, _, err = run(capsys, "sweep", "heisenberg:1", "--q", "6")
    assert code == 2


# -- check ------------------------------------------------------------------------


def test_check_file(emitted, capsys):
    code, out, _ = run(capsys, "check", emitted("h:1+h:1"))
    assert code == 0 and "degree: 25/64" in out and "FAIL" not in out
    code, out, _ = run(capsys, "check", emitted("affine2"))
    assert code == 0
    assert "PASS centerless_equality_iff_derived_dim_1: True <=> True (equality, dim L^2 = 1)" in out


def test_check_corpus_small(monkeypatch, capsys):
    small = corpus.corpus_items(qs=(2,), seeds=(0, 1))
    monkeypatch.setattr(cli, "corpus_items", lambda: small)
    code, out, _ = run(capsys, "check", "--corpus", "--seed", "7")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 failed")
    again = run(capsys, "check", "--corpus", "--seed", "7")
    assert again == (code, out, "")


def test_check_needs_input(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["check"])
    assert info.value.code == 2


# -- isoclinic --------------------------------------------------------------------


def test_isoclinic_search(emitted, capsys):
    code, out, _ = run(capsys, "isoclinic", emitted("h:1+h:1"), emitted("l67_2"), "--search")
    assert code == 0
    assert "verdict: isoclinic" in out and "degrees: 25/64 and 25/64" in out


def test_isoclinic_negative(emitted, capsys):
    code, out, _ = run(capsys, "isoclinic", emitted("l55"), emitted("l57"), "--format", "json")
    row = json.loads(out)
    assert code == 0
    assert row["verdict"] == "not-isoclinic"
    assert row["degree_a"] == row["degree_b"] == "11/32"


def test_isoclinic_identity(emitted, capsys):
    h = emitted("heisenberg:1")
    code, out, _ = run(capsys, "isoclinic", h, h, "--format", "json")
    row = json.loads(out)
    assert json.loads(row["witness"]) == {"alpha": [[1, 0], [0, 1]], "beta": [[1]]}


def test_isoclinic_budget_unknown(emitted, capsys):
    code, out, _ = run(capsys, "isoclinic", emitted("h:1+h:1"), emitted("l67_2"), "--budget", "100")
    assert code == 1 and "verdict: unknown" in out


def test_isoclinic_witness_file(tmp_path, emitted, capsys):
    a, b = emitted("h:1+h:1"), emitted("l67_2")
    good = write(tmp_path, "w.json", {"alpha": [[0, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 0], [1, 0, 0, 1]], "beta": [[1, 1], [1, 0]]})
    code, out, _ = run(capsys, "isoclinic", a, b, "--witness", good)
    assert code == 0 and "verdict: isoclinic" in out
    bad = write(tmp_path, "bad.json", {"alpha": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "beta": [[1, 0], [0, 1]]})
    code, out, _ = run(capsys, "isoclinic", a, b, "--witness", bad)
    assert code == 1 and "witness-rejected" in out
    singular = write(tmp_path, "sing.json", {"alpha": [[0] * 4] * 4, "beta": [[1, 0], [0, 1]]})
    code, _, err = run(capsys, "isoclinic", a, b, "--witness", singular)
    assert code == 2 and "SingularWitness" in err


def test_isoclinic_field_mismatch(emitted, capsys):
    code, _, err = run(capsys, "isoclinic", emitted("heisenberg:1", 2), emitted("heisenberg:1", 3))
    assert code == 2 and "FieldMismatch" in err


# -- catalog / plumbing -----------------------------------------------------------


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--format", "json")
    names = [json.loads(line)["family"] for line in out.splitlines()]
    assert names == [n for n, _ in list_families()]


def test_out_flag(tmp_path, emitted, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "degree", emitted("heisenberg:1"), "--out", target)
    assert code == 0 and out == ""
    assert "degree: 5/8" in target.read_text()


def test_usage_errors(capsys):
    for argv in (["bogus"], ["degree"], ["degree", "x.json", "--method", "fast"], ["degree", "x.json", "--cap", "0"]):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "liecomm", "sweep", "affine2", "--q", "2,3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "5/8" in proc.stdout and "11/27" in proc.stdout
