import os

import pytest

import gbsect

DATA = os.environ.get("GBSECT_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data"))


def test_quartic_system_basis():
    basis = gbsect.reduced_basis(["x + y*z + y - z^4 - 4", "y - z^3 - 1"], ["x", "y", "z"])
    assert basis == ["x + z^3 + z - 3", "y - z^3 - 1"]


def test_parametric_basis_cleared():
    basis = gbsect.reduced_basis(
        ["z - x^2/a^2 - y^2/b^2", "x^2/a^2 + y^2/b^2 - x/a - y/b"], ["x", "y", "z"], ["a", "b"], mode="cleared"
    )
    assert basis[0] == "b*x + a*y - a*b*z"


def test_normal_form():
    assert gbsect.normal_form("x^2*y + x*y^2 + y^2", ["x*y - 1", "y^2 - 1"], ["x", "y"]) == "2*y + 1"


def test_planes():
    r = gbsect.planes(["x + y*z + y - z^4 - 4", "y - z^3 - 1"], ["x", "y", "z"])
    assert r == {"status": "planes", "planes": ["x + y + z - 4"]}
    assert gbsect.planes(["x^2 + y^2 - z"], ["x", "y", "z"])["status"] == "none"


def test_run_cli():
    code, out, _ = gbsect.run(["planar", os.path.join(DATA, "quartic.sys")])
    assert code == 0
    assert out == "x + y + z - 4 = 0\n"
    code, out, _ = gbsect.run(["conoid", "verdict"])
    assert out.endswith("no plane section is a non-degenerate conic\n")
    code, _, err = gbsect.run(["basis", "--vars", "x", "x +"])
    assert code == 1 and err


def test_parse_error():
    with pytest.raises(ValueError):
        gbsect.reduced_basis(["x*"], ["x"])
