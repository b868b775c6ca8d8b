import io
import json

import jsonschema
import pytest

from wfano.cli import run
from wfano.schema import ERROR_SCHEMA, REPORT_SCHEMA


def _run(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


def _run_json(argv):
    code, text = _run(argv)
    return code, json.loads(text)


def test_certify_example():
    code, rep = _run_json(["certify", "--weights", "1,1,1,1,2", "--degree", "5"])
    assert code == 0
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["outputs"]["bound"] == "4/3"
    assert rep["outputs"]["verdict"] == "K-stable"
    assert rep["schema_version"] == "wfano-certify/1"


def test_moments_example():
    code, rep = _run_json(["moments", "s-value", "--n", "3", "--a", "2",
                           "--k", "2", "--j", "1"])
    assert code == 0
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["outputs"]["s_value"] == "7/8"


def test_wps_normalize_example():
    code, rep = _run_json(["wps", "normalize", "--weights", "2,2,3"])
    assert code == 0
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["outputs"]["weights"] == "1,1,3"


def test_weight_text_form():
    code, rep = _run_json(["wps", "index", "--weights", "P(1^4,2)",
                           "--degree", "5"])
    assert code == 0
    assert rep["outputs"]["index"] == 1


def test_exit_code_2_on_precondition():
    code, rep = _run_json(["certify", "--weights", "1,1,1", "--degree", "9"])
    assert code == 2
    jsonschema.validate(rep, ERROR_SCHEMA)

    code, rep = _run_json(["wps", "stratum", "--weights", "1,1,2",
                           "--vanish", "0,1"])
    assert code == 2

    code, rep = _run_json(["certify", "--weights", "2,4,6,8", "--degree", "3"])
    assert code == 2


def test_usage_error_is_machine_readable():
    code, rep = _run_json(["certify", "--weights", "1,1,1,1,2"])
    assert code == 2
    assert rep["error"]["kind"] == "usage"


def test_byte_identical_determinism():
    argv = ["enumerate", "--n", "3", "--max-weight", "3", "--index", "1"]
    _, out1 = _run(argv)
    _, out2 = _run(argv)
    assert out1 == out2

    import os
    os.environ["WFANO_THREADS"] = "4"
    try:
        _, out3 = _run(argv)
    finally:
        del os.environ["WFANO_THREADS"]
    assert out1 == out3


def test_enumerate_csv():
    code, text = _run(["enumerate", "--n", "3", "--max-weight", "2",
                       "--index", "1", "--csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].startswith("weights,degree,index,bound")
    assert len(lines) > 1


def test_moments_table_csv():
    code, text = _run(["moments", "table", "--n-max", "2", "--a-max", "1",
                       "--k-max", "1"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "n,a,k,j,q_in_W1,S,closed_form,match"
    assert all(line.endswith("True") for line in lines[1:])


def test_okounkov_case_and_samples():
    code, rep = _run_json(["okounkov", "case", "hirzebruch2", "--a", "2"])
    assert code == 0
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["outputs"]["L2"] == "1/6"
    assert rep["outputs"]["s_value"] == "2/9"

    code, text = _run(["okounkov", "case", "hirzebruch2", "--a", "2",
                       "--csv-samples", "4"])
    assert code == 0
    assert text.splitlines()[0] == "x,upper"
    assert len(text.strip().splitlines()) == 6


def test_blowup_subcommands():
    code, rep = _run_json(["blowup", "build", "--weights", "2,3,4,4,5", "--r", "2"])
    assert code == 0
    jsonschema.validate(rep, REPORT_SCHEMA)
    frame = rep["outputs"]["frame"]
    assert frame["h"] == 1 and frame["hp"] == 1 and frame["g"] == 2

    code, rep = _run_json(["blowup", "intersect", "--weights", "2,3,4,4,5",
                           "--r", "2", "--k", "2"])
    assert rep["outputs"]["value"] == "1/480"

    code, rep = _run_json(["blowup", "transform", "--weights", "3,1,1,1",
                           "--r", "2", "--poly",
                           "x3^2*x1^2 + x3*x0 + x1^4 + x2^4"])
    assert code == 0
    assert rep["outputs"]["bidegree"] == [2, 2]


def test_approx_column():
    code, rep = _run_json(["--approx", "moments", "s-value", "--n", "3",
                           "--a", "2", "--k", "2", "--j", "1"])
    assert code == 0
    assert rep["approx"]["s_value"] == "0.875"


def test_text_format():
    code, text = _run(["--format", "text", "certify", "--weights", "1,1,1,1,2",
                       "--degree", "5"])
    assert code == 0
    assert "K-stable" in text and "4/3" in text


def test_base_locus_subcommand():
    code, rep = _run_json(["wps", "base-locus", "--weights", "1,1,1,1,2,3",
                           "--threshold", "2", "--point", "0"])
    assert code == 0
    assert rep["outputs"]["vanishing"] == [1, 2, 3, 4]
