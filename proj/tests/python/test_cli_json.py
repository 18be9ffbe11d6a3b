import json

import jsonschema
import pytest


@pytest.mark.parametrize(
    "args",
    [
        ["table", "--family", "D", "--order", "1", "--n", "4"],
        ["table", "--family", "C", "--order", "3", "--n", "6"],
        ["table", "--mixed", "BE", "--r", "2", "--s", "1", "--n", "5"],
    ],
)
def test_table_schema(run, schema, args):
    res = run(*args, "--format", "json")
    assert res.returncode == 0
    jsonschema.validate(json.loads(res.stdout), schema("table"))


def test_report_schema(run, schema):
    res = run("verify", "--id", "all", "--n-max", "4", "--orders", "1..2", "--format", "json")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    jsonschema.validate(doc, schema("report"))
    assert {r["identity"] for r in doc} == {"E11", "E14", "E17", "E21", "E24", "E28", "E31", "E34", "E37", "E40"}


def test_failing_report_schema(run, schema):
    res = run("verify", "--id", "E34", "--variant", "as-printed", "--n-max", "6", "--format", "json")
    assert res.returncode == 1
    doc = json.loads(res.stdout)
    jsonschema.validate(doc, schema("report"))
    assert any(r["verdict"] == "fail" for r in doc)


@pytest.mark.parametrize(
    "args",
    [
        ["--kind", "bosonic", "--binom", "1", "--p", "3", "--N", "1..3", "--target", "daehee"],
        ["--kind", "fermionic", "--binom", "0", "--p", "5", "--N", "1..2", "--target", "changhee"],
        ["--kind", "fermionic", "--binom", "2", "--p", "3", "--N", "1..2", "--fold", "2", "--x0", "1"],
        ["--kind", "bosonic", "--poly", "0,0,1", "--N", "1..2", "--target", "1/6"],
    ],
)
def test_trace_schema(run, schema, args):
    res = run("padic", *args, "--format", "json")
    assert res.returncode == 0
    jsonschema.validate(json.loads(res.stdout), schema("trace"))


def test_trace_infinite_valuation(run):
    res = run("padic", "--kind", "fermionic", "--binom", "0", "--p", "3", "--N", "1", "--target", "changhee",
              "--format", "json")
    assert json.loads(res.stdout)["rows"][0]["vp"] == "inf"


@pytest.mark.parametrize("extra", [[], ["--n", "3"]])
def test_eval_schema(run, schema, extra):
    res = run("eval", "(t/log(1+t))^2*(1+t)^x", "--T", "5", *extra, "--format", "json")
    assert res.returncode == 0
    jsonschema.validate(json.loads(res.stdout), schema("eval"))


def test_rerun_is_byte_identical(run):
    args = ["verify", "--id", "all", "--n-max", "5", "--format", "csv"]
    assert run(*args).stdout == run(*args).stdout
