import json

import pytest

from nliealg.cli import run_command
from nliealg.documents import (
    algebra_document,
    emit_document,
    functional_document,
    operator_document,
)
from nliealg.linalg import Matrix


@pytest.fixture
def docs(tmp_path, lie3, family1, abelian33, trace_functional):
    paths = {}

    def write(name, doc):
        p = tmp_path / name
        p.write_text(emit_document(doc))
        paths[name] = str(p)

    write("g.json", algebra_document(lie3))
    write("ab33.json", algebra_document(abelian33))
    write("r1.json", operator_document(family1))
    write("zero3.json", operator_document(Matrix.zero(3)))
    write("ident3.json", operator_document(Matrix.identity(3)))
    write("f.json", functional_document(trace_functional))
    write("bad.json", {"kind": "n_lie_algebra"})
    return paths


def test_check_filippov_passes(docs):
    report, code = run_command(["check", "filippov", "--algebra", docs["g.json"]])
    assert code == 0
    assert "PASS filippov" in report.to_text()


def test_check_reynolds_pass_and_fail(docs, tmp_path):
    report, code = run_command(
        ["check", "reynolds", "--algebra", docs["g.json"], "--operator", docs["r1.json"]])
    assert code == 0
    bad_op = tmp_path / "bad_op.json"
    bad_op.write_text(emit_document(operator_document(
        Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))))
    report, code = run_command(
        ["check", "reynolds", "--algebra", docs["g.json"], "--operator", str(bad_op)])
    assert code == 1
    assert report.to_text().startswith("FAIL reynolds")


def test_check_lift(docs):
    report, code = run_command([
        "check", "lift", "--algebra", docs["g.json"],
        "--operator", docs["r1.json"], "--functional", docs["f.json"]])
    assert code == 0


def test_construct_gf_artifact(docs):
    report, code = run_command([
        "construct", "gf", "--algebra", docs["g.json"], "--functional", docs["f.json"]])
    assert code == 0
    art = report.artifacts[0]
    assert art["kind"] == "n_lie_algebra"
    assert art["arity"] == 3
    assert art["brackets"] == [{"on": [1, 2, 3], "value": ["0", "1", "0"]}]


def test_cohomology_json_output(docs):
    report, code = run_command([
        "cohomology", "--algebra", docs["ab33.json"], "--reynolds", docs["zero3.json"],
        "--max-degree", "1", "--json"])
    assert code == 0
    payload = json.loads(report.to_json())
    rows = payload["artifacts"][0]["rows"]
    assert rows[0]["dimension"] == 3
    assert rows[1]["dimension"] == 9
    assert "timing" not in payload


def test_cohomology_frozen_dimensions(docs):
    report, code = run_command([
        "cohomology", "--algebra", docs["g.json"], "--reynolds", docs["r1.json"]])
    assert code == 0
    rows = report.artifacts[0]["rows"]
    assert [r["dimension"] for r in rows] == [2, 5]


def test_deform_trivial_with_witness_artifact(docs):
    report, code = run_command([
        "deform", "--algebra", docs["g.json"], "--reynolds", docs["r1.json"],
        "--direction", docs["zero3.json"]])
    assert code == 0
    assert any(n == "status: trivial" for n in report.notes)


def test_operator_to_derivation_singular_exit_2(docs):
    report, code = run_command([
        "operator", "to-derivation", "--algebra", docs["g.json"],
        "--operator", docs["r1.json"]])
    assert code == 2
    assert any(n.startswith("error:") for n in report.notes)


def test_missing_file_exit_2(docs):
    report, code = run_command(["check", "filippov", "--algebra", "/no/such/file.json"])
    assert code == 2


def test_invalid_document_exit_2(docs):
    report, code = run_command(["check", "filippov", "--algebra", docs["bad.json"]])
    assert code == 2


def test_usage_error_exit_2():
    _, code = run_command(["check", "unknown-thing", "--algebra", "x"])
    assert code == 2


def test_json_flag_after_subcommand(docs):
    report, code = run_command([
        "check", "filippov", "--algebra", docs["g.json"], "--json"])
    assert code == 0
    payload = json.loads(report.to_json())
    assert payload["verdicts"][0]["passed"] is True


def test_json_output_is_deterministic(docs):
    args = ["construct", "induced", "--algebra", docs["g.json"],
            "--operator", docs["r1.json"], "--json"]
    r1, _ = run_command(args)
    r2, _ = run_command(args)
    assert r1.to_json() == r2.to_json()


def test_construct_det3_requires_variant(docs):
    _, code = run_command([
        "construct", "det3", "--algebra", docs["g.json"],
        "--operator", docs["zero3.json"]])
    assert code == 2
