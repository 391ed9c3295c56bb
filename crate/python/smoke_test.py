"""Smoke test for the pygbessel extension module.

Build and install first:  pip install crates/py   (or maturin develop in crates/py)
"""
import math

import pygbessel as gb


def close(x, y, tol):
    assert abs(x - y) <= tol, f"{x} vs {y}"


def main():
    j = gb.eval_bessel_j(0.7, 0.5)
    g = gb.eval_gbessel(gb.GBesselParams(1, 1.0, 0.7, 1.0), 0.5)
    close(abs(j - g), 0.0, 1e-15)
    close(gb.eval_bessel_i(0.5, 1.0), math.sinh(1.0) * math.sqrt(2 / math.pi), 1e-14)
    close(gb.bessel_j_zero(0.5, 1), math.pi, 1e-12)

    r = gb.radius("f", 1, 0.7, 0.0)
    close(r.value, 1.44678, 5e-6)
    assert r.residual <= 1e-10 and r.equation_id == "radius-f-bessel-j"
    close(gb.in_disk_radius("g", gb.radius("g", 1, 0.7, 0.0).value), 1.0, 0.0)
    close(gb.threshold_nu_f(2, 0.5).value, 0.706779, 5e-6)
    close(gb.threshold_nu_g(1, 0.0).value, -0.340092, 5e-6)

    rep = gb.verify_starlike_on_disk(1, 0.7, 0.0, 1.43, "f", n_circles=8, n_angles=180)
    assert rep["verdict"] == "PASS"
    cells = gb.compute_table(2)
    assert len(cells) == 9 and all(c["within_tolerance"] for c in cells)

    try:
        gb.radius("f", 2, 0.0, 0.0)
    except gb.GBesselError as e:
        assert "condition" in str(e)
    else:
        raise AssertionError("expected GBesselError")
    cfg = gb.SeriesConfig(max_terms=50, rel_tol=1e-12)
    close(abs(gb.eval_bessel_j(0.0, 1.0, cfg) - 0.7651976865579666), 0.0, 1e-12)
    print("pygbessel smoke test passed")


if __name__ == "__main__":
    main()
