import json
import subprocess
import sys

import jsonschema
import pytest

from symmetra import emit_report, similarities, symmetries
from symmetra.report import gauss_str, report_schema, root_index, value_json
from symmetra.numeric import CPoly, GaussRat, I, ONE
from symmetra.algebraic import isolate_roots
from symmetra.reports import not_similar
from symmetra.verify import RealInterval
from gmpy2 import mpq

from conftest import CUBIC, QUINTIC, SEXTIC, SEXTIC_IMAGE, STIRRUP_1, STIRRUP_2, X, Y


@pytest.fixture(scope="module")
def schema():
    s = report_schema()
    jsonschema.Draft202012Validator.check_schema(s)
    return s


def validate(text, schema):
    data = json.loads(text)
    jsonschema.validate(data, schema, cls=jsonschema.Draft202012Validator)
    return data


def test_sextic_symmetry_report(schema):
    data = validate(emit_report(symmetries(SEXTIC)), schema)
    assert data["center"] == {"re": "0/1", "im": "0/1"}
    assert data["rotations"] == [{"order": 3, "lambda": 1}]
    assert len(data["reflections"]) == 3
    assert data["reflections"][0]["unit_w"] == {"re": "1/1", "im": "0/1"}
    assert data["reflections"][0]["axis_angle_approx"] == "0.0"
    # the irrational units carry their defining polynomial and a 30-digit value
    algebraic = data["reflections"][1]["unit_w"]
    assert algebraic["minpoly"][-1] == "1/1+0/1*i"
    assert algebraic["approx"][0].startswith("-0.5")
    assert data["group_order"] == 6 and data["infinite_family"] is None


def test_not_similar_exact_text(schema):
    text = emit_report(not_similar("whatever"))
    assert json.loads(text) == {"status": "not_similar", "similarities": []}
    validate(text, schema)


def test_stirrup_report(schema):
    data = validate(emit_report(similarities(STIRRUP_1, STIRRUP_2)), schema)
    assert data["status"] == "similar"
    assert [e["mu2"] for e in data["similarities"]] == ["1/1", "1/1"]
    assert {e["kind"] for e in data["similarities"]} == {"direct", "opposite"}


@pytest.mark.parametrize(
    "make",
    [
        lambda: symmetries(QUINTIC),
        lambda: symmetries(CUBIC),
        lambda: symmetries(X**3 + 2 * X * Y + Y**2 - X + 5),
        lambda: symmetries((X + Y) * (X + Y - 1)),
        lambda: symmetries((X**2 + Y**2 - 1) * (X**2 + Y**2 - 4)),
        lambda: similarities(SEXTIC, SEXTIC_IMAGE),
        lambda: similarities(X**2 - 1, Y**2 - 4),
        lambda: similarities(X * Y * (X - Y), (X - 1) * Y * (X + Y - 1)),
    ],
)
def test_reports_validate(make, schema):
    validate(emit_report(make()), schema)


def test_algebraic_beta_serialized(schema):
    data = validate(emit_report(similarities(SEXTIC, SEXTIC_IMAGE)), schema)
    kinds = [("poly_in_alpha" in e["beta"], "minpoly" in e["alpha"]) for e in data["similarities"]]
    assert (True, True) in kinds and (False, False) in kinds


def test_trailing_newline_and_sorted_keys():
    text = emit_report(symmetries(QUINTIC))
    assert text.endswith("}\n")
    data = json.loads(text)
    assert list(data) == sorted(data)


def test_byte_identical_across_processes():
    code = (
        "from symmetra import parse_poly, symmetries, emit_report;"
        "import sys; sys.stdout.write(emit_report(symmetries(parse_poly('x^6 - 15*x^4*y^2 - 2*x^3 + 15*x^2*y^4 + 6*x*y^2 - y^6'))))"
    )
    outs = set()
    for seed in ("0", "1", "12345"):
        env = {"PYTHONHASHSEED": seed, "PATH": "/usr/bin:/bin"}
        outs.add(subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True).stdout)
    assert len(outs) == 1
    assert outs.pop() == emit_report(symmetries(SEXTIC))


def test_value_encodings():
    assert value_json(mpq(-3, 4)) == "-3/4"
    assert value_json(GaussRat(1, -2)) == {"re": "1/1", "im": "-2/1"}
    iv = value_json(RealInterval(mpq(1), mpq(2)))
    assert iv["interval"] == ["1/1", "2/1"] and iv["approx"].startswith("1.5")
    assert gauss_str(GaussRat(mpq(1, 2), -1)) == "1/2-1/1*i"


def test_root_index_orders_by_argument():
    roots = [a for a, _ in isolate_roots(CPoly([-ONE, GaussRat(0), GaussRat(0), ONE]))]
    # cube roots of unity at arguments 0, 2pi/3, 4pi/3
    by_index = sorted(roots, key=root_index)
    assert abs(by_index[0].approx(20) - 1) < 1e-15
    assert by_index[1].approx(20).imag > 0 > by_index[2].approx(20).imag
