import math
import os
import subprocess

import pytest

import latdisc


def test_counts_and_discrepancy():
    disc = latdisc.disc()
    assert latdisc.count(disc, 2.0, [0.0, 0.0]) == 13
    assert latdisc.count(disc, 1.0, [0.5, 0.5]) == 4
    assert latdisc.discrepancy(disc, 2.0, [0.0, 0.0]) == pytest.approx(13 - 4 * math.pi)


def test_bodies():
    ball = latdisc.load_body('{"kind":"ellipsoid","semi_axes":[1,1,1]}')
    assert ball.dimension == 3
    assert ball.volume == pytest.approx(4 * math.pi / 3)
    assert not latdisc.asymmetric_body().point_symmetric
    with pytest.raises(ValueError):
        latdisc.load_body('{"kind":"cube"}')


def test_field_is_seeded():
    disc = latdisc.disc()
    a = latdisc.field(disc, 5.3, samples=500, seed=4)
    b = latdisc.field(disc, 5.3, samples=500, seed=4)
    assert a == b
    points, values = a
    assert len(points) == 2 * len(values) == 1000
    rep = latdisc.norm_report(values, 2.0)
    assert rep.weak <= rep.strong <= rep.sup


def test_fourier_and_chords():
    disc = latdisc.disc()
    v = latdisc.chi_hat(disc, [10.0, 0.0])
    assert abs(v.imag) < 1e-12
    assert abs(v) <= latdisc.podkorytov_bound(disc, 10.0, 0.0)
    seq = latdisc.spectral_sequence(disc, 2.0, 8)
    assert len(seq["frequencies"]) == 2 * len(seq["values"])
    assert seq["decay_constant"] > 0


def test_dirichlet():
    cert = latdisc.dirichlet_search([math.sqrt(2.0)], 5)
    assert cert["r"] == 5
    with pytest.raises(OverflowError):
        latdisc.exceptional_radii(latdisc.unit_ball(5), 2.0, 4)


def test_sweep_and_fit():
    radii = [8 * 2 ** (k / 2) for k in range(6)]
    text = latdisc.sweep_csv(latdisc.disc(), radii, [2.0], samples=500, seed=1)
    rows = [line.split(",") for line in text.splitlines()[1:]]
    assert len(rows) == 6
    fit = latdisc.fit_exponent([(float(r[1]), float(r[3])) for r in rows])
    assert 0.0 < fit["slope"] < 1.0


@pytest.mark.skipif("LATDISC_CLI" not in os.environ, reason="CLI path not given")
def test_cli_matches_module():
    out = subprocess.run([os.environ["LATDISC_CLI"], "count", "--R", "3"], capture_output=True, text=True, check=True)
    assert out.stdout.strip().split()[0] == str(latdisc.count(latdisc.disc(), 3.0, [0.0, 0.0]))
