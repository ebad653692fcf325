import cmath
import math

import pytest

import mcmullen as mc


def test_eval_and_involution_pair():
    p = mc.MapParams(3, 8, 0.5)
    assert mc.eval_map(p, 1) == pytest.approx(9.5)
    assert mc.eval_map(p, 2) == pytest.approx(9.5)
    assert mc.involution(p, 1) == pytest.approx(2)


def test_pole_raises():
    with pytest.raises(ZeroDivisionError):
        mc.eval_map(mc.MapParams(3, 1, 0), 0)


def test_critical_values_and_points():
    p = mc.MapParams(3, 0.09725 + 0.4351j, -0.5)
    vm, vp = mc.critical_values(p)
    for z in mc.critical_points(p):
        w = mc.eval_map(p, z)
        assert min(abs(w - vm), abs(w - vp)) < 1e-10


def test_orbit_outcomes():
    out = mc.iterate_orbit(mc.MapParams(3, 1, -1), 3, mc.EscapeSettings(2.0, 256))
    assert out.escaped and out.steps == 1
    assert out.modulus == pytest.approx(27 + 1 / 27 - 1)
    assert mc.mandelbrot_classify(-1, mc.EscapeSettings(2.0, 256)).bounded


def test_certificates():
    rep = mc.certify_polynomial_like(mc.MapParams(3, 1, -0.5), 0, mc.Regime.Standard)
    assert rep.passed
    wind = mc.certify_winding(mc.make_cplane_window(5, 1.0, 0))
    assert wind.passed and wind.margin == 1
    assert "CHECK name=winding" in wind.to_lines()
    sym = mc.certify_symmetries(mc.MapParams(4, 0.5, 0.3))
    names = {c.check_name: c.verdict for c in sym.children}
    assert names["sign_symmetry"] == "not-applicable"


def test_landmarks():
    a = mc.overlap_parameter(11)
    assert a == pytest.approx(0.25 ** 1.1)
    assert abs(mc.baby_center(11, a)) < 1e-12
    assert mc.interval_positions(11, 1.0)["ordering"] == "I1_left_of_I2"


def test_render_bytes_and_determinism():
    p = mc.MapParams(5, 0.7, -0.75)
    one = mc.render_julia_ppm(p, width=32, height=32, threads=1)
    many = mc.render_julia_ppm(p, width=32, height=32, threads=3)
    assert one == many
    assert one.startswith(b"P6\n32 32\n255\n")
    assert len(one) == len(b"P6\n32 32\n255\n") + 32 * 32 * 3


def test_scan_finds_center():
    res = mc.scan_boundedness_locus(mc.make_cplane_window(5, 1.0, 0), density=32)
    assert res["nonempty"] and res["contains_center"]
    assert res["center"] == pytest.approx(-1)
