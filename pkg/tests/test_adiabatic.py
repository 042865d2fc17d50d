"""Mode evolution through the smooth separation schedule."""

import math

import numpy as np
import pytest

from platevac import adiabatic as ad


# ---------------------------------------------------------------------------
# schedule


def test_schedule_eval_midpoint_and_endpoints():
    s = ad.Schedule(1.0, 2.0, 3.0)
    assert ad.schedule_eval(s, 0.0) == pytest.approx(1.5, abs=1e-15)
    assert ad.schedule_eval(s, -3.0) == 1.0  # exact, no tan evaluation
    assert ad.schedule_eval(s, 3.0) == 2.0
    assert ad.schedule_eval(s, -100.0) == 1.0
    assert ad.schedule_eval(s, 100.0) == 2.0


def test_schedule_eval_quarter_point():
    s = ad.Schedule(1.0, 2.0, 3.0)
    want = 1.5 + 0.5 * math.tanh(1.0)  # s = tanh(tan(pi/4))
    assert ad.schedule_eval(s, 1.5) == pytest.approx(want, abs=1e-15)


def test_schedule_monotone_and_continuous_near_edges():
    s = ad.Schedule(1.0, 2.0, 2.0)
    ts = np.linspace(-2.0, 2.0, 4001)
    ls = [ad.schedule_eval(s, t) for t in ts]
    assert all(b >= a for a, b in zip(ls, ls[1:]))
    assert ls[0] == 1.0 and ls[-1] == 2.0
    assert abs(ad.schedule_eval(s, 2.0 * (1.0 - 1e-9)) - 2.0) < 1e-12


def test_schedule_validation_and_reversal():
    with pytest.raises(ValueError):
        ad.Schedule(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        ad.Schedule(1.0, 1.0, -2.0)
    r = ad.Schedule(1.0, 2.0, 5.0).reversed()
    assert (r.L0, r.L1, r.T) == (2.0, 1.0, 5.0)


def test_mode_frequency():
    assert ad.mode_frequency(1, 0.0, 1.0) == pytest.approx(math.pi, abs=1e-15)
    assert ad.mode_frequency(2, 0.0, 2.0) == pytest.approx(math.pi, abs=1e-15)
    assert ad.mode_frequency(1, 3.0, 1.0) == pytest.approx(math.hypot(3.0, math.pi))
    with pytest.raises(ValueError):
        ad.mode_frequency(0, 0.0, 1.0)
    with pytest.raises(ValueError):
        ad.mode_frequency(1, -1.0, 1.0)


# ---------------------------------------------------------------------------
# single evolutions


def test_trivial_schedule_exact_phase_convention():
    r = ad.evolve_mode(ad.Schedule(1.3, 1.3, 2.0), 1, 0.5)
    assert r.alpha == 1.0 + 0.0j
    assert r.beta == 0.0 + 0.0j
    assert r.particle_number == 0.0
    assert r.energy_final == 0.5 * r.omega_out
    assert r.wronskian_drift == 0.0


def test_sudden_limit_matches_closed_form():
    want = math.sqrt(2.0) / 4.0
    assert ad.sudden_beta_magnitude(1, 0.0, 1.0, 2.0) == pytest.approx(want, abs=1e-15)
    r = ad.evolve_mode(ad.Schedule(1.0, 2.0, 1e-4), 1, 0.0)
    assert abs(abs(r.beta) - want) <= 1e-3 * want


def test_sudden_limit_convergence_rate():
    # deviation must shrink at least first order in T (this schedule does better)
    want = math.sqrt(2.0) / 4.0
    ts = [4e-3, 2e-3, 1e-3]
    devs = [
        abs(abs(ad.evolve_mode(ad.Schedule(1.0, 2.0, t), 1, 0.0).beta) - want)
        for t in ts
    ]
    slope = np.polyfit(np.log(ts), np.log(devs), 1)[0]
    assert slope >= 0.9


def test_normalization_invariant_randomized():
    rng = np.random.default_rng(19)
    for _ in range(8):
        n = int(rng.integers(1, 4))
        k = float(rng.uniform(0.0, 5.0))
        t = float(rng.uniform(0.1, 20.0))
        r = ad.evolve_mode(ad.Schedule(1.0, 2.0, t), n, k)
        assert abs(r.normalization_defect) <= 1e-8
        assert r.wronskian_drift <= 1e-8
        assert r.particle_number == abs(r.beta) ** 2


def test_time_reversal_symmetry():
    fwd = ad.evolve_mode(ad.Schedule(1.0, 2.0, 2.0), 1, 0.3)
    rev = ad.evolve_mode(ad.Schedule(2.0, 1.0, 2.0), 1, 0.3)
    assert abs(abs(fwd.beta) - abs(rev.beta)) <= 1e-8


def test_evolve_validation():
    s = ad.Schedule(1.0, 2.0, 1.0)
    with pytest.raises(ValueError):
        ad.evolve_mode(s, 1, rtol=1e-6)  # too loose for phase accuracy
    with pytest.raises(ValueError):
        ad.evolve_mode(s, 0)
    with pytest.raises(ad.WronskianViolation):
        ad.evolve_mode(s, 1, wronskian_tol=1e-14)


def test_integration_failure_carries_time():
    err = ad.IntegrationFailure("stopped", time=1.25)
    assert err.time == 1.25
    assert isinstance(err, RuntimeError)


# ---------------------------------------------------------------------------
# duration scans


def test_scan_decreasing_with_steep_tail():
    scan = ad.adiabatic_scan(1.0, 2.0, [2.0, 4.0, 8.0])
    numbers = [r.particle_number for r in scan.rows]
    assert numbers[0] > numbers[1] > numbers[2] > 0.0
    assert 1e-4 < numbers[0] < 1e-3
    assert scan.decay_exponent >= 4.0
    # |beta|^2 crosses 1e-6 between T=4 and T=8
    assert 4.0 < scan.threshold_half_duration < 8.0
    assert all(r.wronskian_drift <= 1e-8 for r in scan.rows)


def test_scan_energy_final_approaches_half_omega_out():
    scan = ad.adiabatic_scan(1.0, 2.0, [2.0, 4.0, 8.0])
    w_out = scan.rows[-1].omega_out
    gaps = [abs(r.energy_final - 0.5 * w_out) for r in scan.rows]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-6 * w_out


def test_scan_equal_lengths_all_zero():
    scan = ad.adiabatic_scan(1.5, 1.5, [2.0, 4.0, 8.0])
    assert [r.particle_number for r in scan.rows] == [0.0, 0.0, 0.0]
    assert scan.threshold_half_duration == 2.0  # below target from the start


def test_scan_extrapolates_beyond_range():
    scan = ad.adiabatic_scan(1.0, 2.0, [2.0, 4.0, 8.0], target=1e-12)
    assert scan.threshold_half_duration > 8.0
    assert math.isfinite(scan.threshold_half_duration)


def test_scan_validation():
    with pytest.raises(ValueError):
        ad.adiabatic_scan(1.0, 2.0, [2.0, 4.0])
    with pytest.raises(ValueError):
        ad.adiabatic_scan(1.0, 2.0, [2.0, 8.0, 4.0])


def test_scan_quality_gate(monkeypatch):
    class _Stub:
        def __init__(self, p):
            self.particle_number = p

    values = iter([1e-3, 1e-4, 2e-4])  # rises on the final pair

    def fake_evolve(schedule, n, k, **kwargs):
        return _Stub(next(values))

    monkeypatch.setattr(ad, "evolve_mode", fake_evolve)
    with pytest.raises(ad.ScanQualityError):
        ad.adiabatic_scan(1.0, 2.0, [2.0, 4.0, 8.0])


# ---------------------------------------------------------------------------
# energy bookkeeping


def test_vacuum_energy_shift_single_mode():
    rows = ad.vacuum_energy_shift(ad.Schedule(1.0, 2.0, 6.0), [(1, 0.0)])
    assert len(rows) == 1
    row = rows[0]
    assert row["zero_point_shift"] == pytest.approx(-math.pi / 4.0, abs=1e-15)
    assert row["adiabatic_violation"] == pytest.approx(
        row["omega_out"] * row["particle_number"], abs=1e-18
    )
    assert row["adiabatic_violation"] < 1e-5 * row["omega_out"]


def test_vacuum_energy_shift_trivial_schedule():
    rows = ad.vacuum_energy_shift(ad.Schedule(1.0, 1.0, 2.0), [(1, 0.0), (2, 1.0)])
    for row in rows:
        assert row["zero_point_shift"] == 0.0
        assert row["adiabatic_violation"] == 0.0


def test_vacuum_energy_shift_preserves_order():
    modes = [(2, 0.5), (1, 0.0), (3, 1.0)]
    rows = ad.vacuum_energy_shift(ad.Schedule(1.0, 2.0, 2.0), modes)
    assert [(r["n"], r["k"]) for r in rows] == [(2, 0.5), (1, 0.0), (3, 1.0)]


def test_transverse_momentum_grid():
    grid = ad.transverse_momentum_grid(5.0, 5)
    assert grid[0] == 0.0
    assert grid[-1] == pytest.approx(5.0)
    ratios = grid[2:] / grid[1:-1]
    assert np.allclose(ratios, ratios[0])
    with pytest.raises(ValueError):
        ad.transverse_momentum_grid(0.0, 5)
    with pytest.raises(ValueError):
        ad.transverse_momentum_grid(1.0, 1)
