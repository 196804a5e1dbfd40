import math

import pytest

import frontal


def test_sample_is_deterministic():
    assert frontal.sample(7) == frontal.sample(7)
    assert frontal.sample(7) != frontal.sample(8)


def test_invariants_direct_matches_closed_form():
    text = frontal.sample(3)
    d = frontal.invariants(text)
    c = frontal.invariants(text, closed_form=True)
    for key in ("kappa_s", "kappa_nu", "kappa_t", "kappa_c"):
        for a, b in zip(d[key], c[key]):
            assert math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9)
    assert abs(d["kappa_c"][0]) < 1e-12
    assert d["B"] is not None


def test_classify_strata():
    text = frontal.sample(5)
    assert frontal.classify(text, stratum="generic")["dpc"]["label"].startswith("A1")
    assert frontal.classify(text, stratum="edge-osculating")["edge"]["label"].startswith("A2")
    with pytest.raises(frontal.FrontalError):
        frontal.classify(text, direction=[0, 0, 0])


def test_dpc_limit():
    r = frontal.dpc(frontal.sample(9))
    assert math.isclose(r["kappa_sq_numeric"], r["kappa_sq_limit"], rel_tol=1e-5)


def test_discriminant_points():
    pts = frontal.discriminant("v+u^2", "PD", grid=5)
    assert len(pts) == 25
    assert any(abs(p[0] + 1) < 1e-12 and abs(p[2] + 0.25) < 1e-12 for p in pts)
    with pytest.raises(frontal.FrontalError):
        frontal.discriminant("w+u^2+buv+cv^2", "PD", b=1.0, c=0.25)


def test_verify_single_suite():
    (r,) = frontal.verify(samples=5, only=8)
    assert r["passed"]
