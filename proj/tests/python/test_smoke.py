import json
import math
import os
import subprocess

import pytest

import cubiso


def test_worked_cubic():
    cls = cubiso.classify((3, -0.5, -4))
    assert cls.regime.kind == "R2"
    assert cls.regime.figure_id == 7
    assert cls.c_slot == 5
    assert cls.count.kind == "ThreeDistinct"
    assert (cls.signs.n_pos, cls.signs.n_neg) == (1, 2)

    iso = cubiso.isolate((3, -0.5, -4), harness="off")
    assert iso.citation == "Figure 7, case (5)"
    assert [iv.lo.tag for iv in iso.intervals] == ["rho2", "mu2", "rho1"]
    roots = cubiso.solve_all((3, -0.5, -4)).values
    assert roots == pytest.approx([-2.600955888339354, -1.455589403823122, 1.056545292162476], rel=1e-13)
    for iv, r in zip(iso.intervals, roots):
        assert iv.contains(r)


def test_landmarks_and_harness():
    lm = cubiso.landmarks(3, -0.5)
    assert lm.c1 == pytest.approx(0.020288049380834534)
    assert lm.xi2 == pytest.approx(1.160246899469286744)
    assert cubiso.landmarks(0, 1).c1 is None
    h = cubiso.harness(3, -0.5)
    assert (h.lower, h.upper) == pytest.approx((3.240370349203930, 3.741657386773941))
    with pytest.raises(cubiso.CubisoError):
        cubiso.harness(0, 1)


def test_general_input_and_errors():
    m = cubiso.monicize(cubiso.GeneralCubic(2, 6, -1, -8))
    assert tuple(m) == (3, -0.5, -4)
    with pytest.raises(cubiso.CubisoError):
        cubiso.monicize(cubiso.GeneralCubic(0, 1, 2, 3))
    assert cubiso.discriminant((3, -0.5, -4)) == pytest.approx(110.75)


def test_check_and_json():
    for m in [(3, -0.5, -4), (-3, 3, -1), (0, 0, 0), (0, -3, 2), (-8, 22.4, -14.4)]:
        assert cubiso.check(m).passed
        assert cubiso.check(m, harness="demo", bounds="generic").passed
    doc = json.loads(cubiso.to_json((3, -0.5, -4)))
    assert doc["figure"] == 7
    assert doc["verification"]["pass"] is True
    assert doc["intervals"][2]["hi_tag"] == "xi2"


def test_rayleigh_sweep():
    cfg = cubiso.rayleigh_preset()
    cfg.t_lo, cfg.t_hi = 0.01, 0.74
    rep = cubiso.run_sweep(cfg)
    assert rep.failed == 0
    ts = {b.identity: b.t for b in rep.boundaries}
    assert ts["b=a^2/3"] == pytest.approx(1 / 6, abs=1e-9)
    assert ts["c=c1"] == pytest.approx(0.3214983973475119, abs=1e-9)
    assert ts["c=c0"] == pytest.approx(17 / 45, abs=1e-9)
    assert len(json.loads(rep.to_json())["samples"]) == 200


@pytest.mark.skipif("CUBISO_CLI" not in os.environ, reason="CLI path not set")
def test_cli_json():
    out = subprocess.run([os.environ["CUBISO_CLI"], "--json", "verify", "--", "3", "-0.5", "-4"],
                         capture_output=True, text=True, check=True)
    doc = json.loads(out.stdout)
    assert doc["citation"] == "Figure 7, case (5)"
    assert math.isclose(doc["verification"]["roots"][0]["value"], -2.600955888339354, rel_tol=1e-12)
    bad = subprocess.run([os.environ["CUBISO_CLI"], "classify", "--", "1", "x", "2"], capture_output=True)
    assert bad.returncode == 2
