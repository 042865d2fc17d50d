"""Regularized plate energies: exact zeta values, dual routes, oracles."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from platevac import casimir as cas


# ---------------------------------------------------------------------------
# exact rational layer


def test_bernoulli_frozen_values():
    assert cas.bernoulli_number(0) == 1
    assert cas.bernoulli_number(1) == Fraction(-1, 2)
    assert cas.bernoulli_number(2) == Fraction(1, 6)
    assert cas.bernoulli_number(4) == Fraction(-1, 30)
    assert cas.bernoulli_number(12) == Fraction(-691, 2730)
    for odd in (3, 5, 7, 9, 11):
        assert cas.bernoulli_number(odd) == 0
    with pytest.raises(ValueError):
        cas.bernoulli_number(-1)


def test_zeta_negative_odd_values():
    assert cas.zeta_negative_odd(1) == Fraction(-1, 12)
    assert cas.zeta_negative_odd(3) == Fraction(1, 120)
    assert cas.zeta_negative_odd(5) == Fraction(-1, 252)
    with pytest.raises(ValueError):
        cas.zeta_negative_odd(0)


def test_mode_mass():
    assert abs(cas.mode_mass(1, math.pi) - 1.0) < 1e-15
    assert abs(cas.mode_mass(2, math.pi) - 2.0) < 1e-15
    assert abs(cas.mode_mass(3, 3.0) - math.pi) < 1e-15
    with pytest.raises(ValueError):
        cas.mode_mass(0, 1.0)
    with pytest.raises(ValueError):
        cas.mode_mass(1, 0.0)


# ---------------------------------------------------------------------------
# per-mode density and its cutoff-subtraction oracle


def test_mode_energy_density_basics():
    want = -1.0 / (12.0 * math.pi)
    assert abs(cas.mode_energy_density(1.0) - want) < 1e-15
    assert abs(cas.mode_energy_density(2.0) - 8.0 * cas.mode_energy_density(1.0)) < 1e-15
    assert abs(cas.mode_energy_density(1e-4)) < 1e-12  # m -> 0 limit
    with pytest.raises(ValueError):
        cas.mode_energy_density(0.0)
    with pytest.raises(ValueError):
        cas.mode_energy_density(-1.0)


def _damped_density_numeric(mass, cutoff):
    """(1/(2 pi)) int (1/2) sqrt(k^2+m^2) e^{-omega/cutoff} k dk by quadrature."""

    def integrand(k):
        omega = math.sqrt(k * k + mass * mass)
        return 0.5 * omega * math.exp(-omega / cutoff) * k

    val, _ = quad(integrand, 0.0, math.inf, limit=200)
    return val / (2.0 * math.pi)


@pytest.mark.parametrize("mass", [0.5, 1.0, 2.0])
def test_mode_energy_density_cutoff_oracle(mass):
    """Independent route: damp, subtract the massless divergence, extrapolate.

    The subtracted density is -m^3/(12 pi) + c1/Lambda + c2/Lambda^2 + ...,
    so a cubic fit in 1/Lambda over a doubling ladder recovers the
    continuation value without ever invoking it.
    """
    cutoffs = [s * max(1.0, mass) for s in (20.0, 40.0, 80.0, 160.0)]
    subtracted = [
        _damped_density_numeric(mass, lam) - _damped_density_numeric(0.0, lam)
        for lam in cutoffs
    ]
    coeffs = np.polyfit([1.0 / lam for lam in cutoffs], subtracted, 3)
    extrapolated = coeffs[-1]
    claimed = cas.mode_energy_density(mass)
    assert abs(extrapolated - claimed) < 1e-6 * abs(claimed)


def test_cutoff_energy_density_closed_form_matches_quadrature():
    for mass, lam in ((0.0, 10.0), (1.0, 25.0), (2.5, 40.0)):
        closed = cas.cutoff_energy_density(mass, lam)
        numeric = _damped_density_numeric(mass, lam)
        assert abs(closed - numeric) < 1e-10 * abs(closed)
    with pytest.raises(ValueError):
        cas.cutoff_energy_density(-1.0, 10.0)
    with pytest.raises(ValueError):
        cas.cutoff_energy_density(1.0, 0.0)


# ---------------------------------------------------------------------------
# Abel-Plana route


def test_abel_plana_contour_equals_exact_zeta():
    value, err = cas.abel_plana_zeta3()
    assert abs(value - 1.0 / 120.0) < 1e-10
    assert err < 1e-8


def test_abel_plana_identity_moderate_damping():
    # full identity, with the 6/eps^4 term still within float range
    assert cas.abel_plana_identity_gap(1.0) < 1e-10
    assert cas.abel_plana_identity_gap(0.5) < 1e-10
    with pytest.raises(ValueError):
        cas.abel_plana_identity_gap(0.0)


def test_abel_plana_damping_limit():
    # contour side with residual damping eps: approaches 1/120 as eps -> 0
    def contour(eps):
        def integrand(t):
            x = 2.0 * math.pi * t
            bose = math.exp(-x) if x > 700.0 else 1.0 / math.expm1(x)
            return 2.0 * t**3 * math.cos(eps * t) * bose

        val, _ = quad(integrand, 0.0, math.inf)
        return val

    assert abs(contour(1e-3) - 1.0 / 120.0) < 1e-8
    gap_coarse = abs(contour(1e-1) - 1.0 / 120.0)
    gap_fine = abs(contour(1e-2) - 1.0 / 120.0)
    assert gap_fine < gap_coarse  # quadratic approach, strictly improving


# ---------------------------------------------------------------------------
# plate energy routes


def test_zeta_route_analytic():
    for length in (0.5, 1.0, 2.0):
        got = cas.casimir_energy_per_area(length, "zeta")
        want = -(math.pi**2) / (1440.0 * length**3)
        assert abs(got.value - want) <= 1e-13 * abs(want)
        assert got.method == "zeta"
        assert got.parameters["zeta_minus_3"] == "1/120"
    frozen = cas.casimir_energy_per_area(1.0, "zeta").value
    assert abs(frozen - (-6.853891945200942e-3)) < 1e-15


def test_dual_route_agreement():
    for length in (0.5, 1.0, 2.0):
        z = cas.casimir_energy_per_area(length, "zeta")
        a = cas.casimir_energy_per_area(length, "abel_plana")
        assert abs(z.value - a.value) <= 1e-8 * abs(z.value)
        assert abs(z.value - a.value) <= z.error_estimate + a.error_estimate


def test_cutoff_route_within_error_bars():
    for length in (0.5, 1.0, 2.0):
        z = cas.casimir_energy_per_area(length, "zeta")
        c = cas.casimir_energy_per_area(length, "cutoff_extrapolation")
        assert abs(z.value - c.value) <= z.error_estimate + c.error_estimate
        assert c.parameters["cutoffs"] == [20.0 / length, 40.0 / length, 80.0 / length]


def test_energy_homogeneity_and_monotonicity():
    rng = np.random.default_rng(41)
    for lam in rng.uniform(0.5, 2.0, size=8):
        base = cas.casimir_energy_per_area(1.0).value
        scaled = cas.casimir_energy_per_area(float(lam)).value
        assert abs(scaled - base / lam**3) <= 1e-12 * abs(base)
    magnitudes = [abs(cas.casimir_energy_per_area(L).value) for L in (0.5, 0.8, 1.0, 1.7, 2.0)]
    assert all(a > b for a, b in zip(magnitudes, magnitudes[1:]))


def test_energy_route_validation():
    with pytest.raises(ValueError):
        cas.casimir_energy_per_area(0.0)
    with pytest.raises(ValueError):
        cas.casimir_energy_per_area(1.0, "dimensional")
    with pytest.raises(ValueError):
        cas.RegularizedSum(1.0, "zeta", {}, -1.0)


# ---------------------------------------------------------------------------
# force


def test_force_analytic_and_finite_difference():
    want = -(math.pi**2) / 480.0
    got = cas.casimir_force_per_area(1.0)
    assert abs(got - want) < 1e-15
    fd = cas.force_finite_difference(1.0)
    assert abs(fd - got) <= 1e-6 * abs(got)


def test_force_sign_and_scaling():
    for length in (0.3, 1.0, 4.0):
        assert cas.casimir_force_per_area(length) < 0.0  # attractive
    f1 = cas.casimir_force_per_area(1.0)
    f2 = cas.casimir_force_per_area(2.0)
    assert abs(f2 - f1 / 16.0) <= 1e-12 * abs(f1)


# ---------------------------------------------------------------------------
# central-charge difference


def test_central_charge_difference_frozen():
    got = cas.central_charge_difference(1.0, 2.0)
    want = -(math.pi**2 / 1440.0) * (1.0 - 1.0 / 8.0)
    assert abs(got - want) <= 1e-10 * abs(want)


def test_central_charge_difference_properties():
    assert cas.central_charge_difference(1.3, 1.3) == 0.0
    forward = cas.central_charge_difference(1.0, 2.0)
    assert cas.central_charge_difference(2.0, 1.0) == -forward  # exact float antisymmetry


def test_central_charge_single_mode():
    got = cas.central_charge_difference(1.0, 2.0, single_mode_n=1)
    want = -(math.pi**2 / 12.0) * (1.0 - 1.0 / 8.0)
    assert abs(got - want) <= 1e-12 * abs(want)
    sym = cas.central_charge_difference(2.0, 1.0, single_mode_n=1)
    assert sym == -got
