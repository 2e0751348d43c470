"""Smoke tests for the Python extension module."""

import json

import pytest

import knotsurgery as ks


def test_polynomial_arithmetic():
    p = ks.LaurentPoly("t - 1 + t^-1")
    assert str(p * p) == "t^2 - 2*t + 3 - 2*t^-1 + t^-2"
    assert (p + p).terms == [((1,), 2), ((0,), -2), ((-1,), 2)]
    assert str(p ** 0) == "1"
    assert ks.exact_divide(ks.LaurentPoly("t^2 - 1"), ks.LaurentPoly("t - 1")) == ks.LaurentPoly("t + 1")
    assert ks.LaurentPoly.from_json(p.to_json()) == p


def test_big_coefficients_are_python_ints():
    p = ks.LaurentPoly("1000000000000*t + 1") ** 3
    assert p.terms[0] == ((3,), 10**36)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ks.KnotSurgeryError):
        ks.exact_divide(ks.LaurentPoly("t^2 + 1"), ks.LaurentPoly("t - 1"))
    with pytest.raises(ValueError):
        ks.symmetrize(ks.LaurentPoly("t^2 + t"))
    with pytest.raises(ValueError):
        ks.alexander("torus(2,4)")


def test_knot_invariants():
    assert str(ks.alexander_torus(2, 3)) == "t - 1 + t^-1"
    assert str(ks.alexander("sum(torus(2,3),unknot)")) == "t - 1 + t^-1"
    assert ks.equal_up_to_units(ks.alexander_fox_torus(3, 4), ks.alexander_torus(3, 4))
    assert ks.genus_torus(5, 6) == 10


def test_surgery_invariants():
    y = ks.LaurentPoly("1", ["y"])
    assert str(ks.torres_specialize(y, 3)) == "y^2 + y + 1"
    r = ks.sw_specialized(2, 1)
    assert r["lower_bound"] == 3
    assert str(r["specialization"]) == "t_G^2 - 1 + t_G^-2"
    assert r["full_polynomial"] is None
    full = ks.sw_specialized(2, 2, ks.LaurentPoly("x*y", ["x", "y"]))
    assert str(full["full_polynomial"]) == "t_K^3*t_G^2 - t_K*t_G^2"
    assert ks.evaluate_at_one(full["full_polynomial"], "t_K").is_zero()


def test_family_and_certificates():
    rows = ks.analyze_family(1, 1, 20)
    assert [r["p"] for r in rows] == list(range(1, 21))
    assert all(r["lemma63_ok"] for r in rows)
    assert ks.family_csv(1, 1, 2).splitlines()[2] == '2,3,true,1,2,"t - 1 + t^-1"'

    cert = ks.certify_unbounded(10)
    assert cert.witnesses[-1][1] > 10
    assert ks.verify_certificate(cert, 2)
    again = ks.Certificate.from_json(cert.to_json())
    assert again.witnesses == cert.witnesses
    assert json.loads(cert.to_json())["schema_version"] == 1
