"""Mode evolution through a smooth plate-separation schedule.

The plate distance follows a smooth interpolation between two static
configurations,

    L(t) = L0                                   for t <= -T,
    L(t) = (1 - s)/2 * L0 + (1 + s)/2 * L1      for -T < t < T,
    L(t) = L1                                   for t >= T,

with s = tanh(tan(pi t / (2 T))).  Every derivative of L vanishes at
t = +-T, so the schedule joins the static regions infinitely smoothly.

Each transverse-momentum / standing-wave mode is an oscillator with
time-dependent frequency omega(t)^2 = k^2 + (n pi / L(t))^2.  The complex
mode function solves f'' + omega(t)^2 f = 0 with positive-frequency data
in the far past; matching onto the out-basis at t = T yields Bogoliubov
coefficients (alpha, beta).  |beta|^2 is the number of quanta produced in
the mode, and omega_out * |beta|^2 is the excess energy over the final
vacuum, i.e. the failure of the evolution to be adiabatic.

Conventions:
    f(-T) = exp(+i omega_in T) / sqrt(2 omega_in),  f'(-T) = -i omega_in f(-T)
    f(T)  = (alpha exp(-i omega_out T) + beta exp(+i omega_out T)) / sqrt(2 omega_out)
    Wronskian W = i (conj(f) f' - conj(f') f) = 1, conserved.

A schedule with L0 == L1 short-circuits to (alpha, beta) = (1, 0); that
exact value fixes the global phase convention.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

__all__ = [
    "Schedule",
    "BogoliubovResult",
    "ScanResult",
    "IntegrationFailure",
    "WronskianViolation",
    "ScanQualityError",
    "schedule_eval",
    "mode_frequency",
    "sudden_beta_magnitude",
    "evolve_mode",
    "adiabatic_scan",
    "vacuum_energy_shift",
    "transverse_momentum_grid",
]

_WRONSKIAN_SAMPLES = 600
_NOISE_FLOOR = 1e-20  # |beta|^2 below this is integrator noise, not signal


class IntegrationFailure(RuntimeError):
    """The ODE solver gave up before reaching t = T."""

    def __init__(self, message: str, time: float):
        super().__init__(message)
        self.time = time


class WronskianViolation(RuntimeError):
    """Wronskian drift exceeded tolerance; the run is not trustworthy."""


class ScanQualityError(RuntimeError):
    """|beta|^2 failed to decrease along an increasing-duration scan."""


@dataclass(frozen=True)
class Schedule:
    """Smooth plate motion from L0 to L1 over the window [-T, T]."""

    L0: float
    L1: float
    T: float

    def __post_init__(self):
        for name in ("L0", "L1", "T"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value}")

    def length(self, t: float) -> float:
        return schedule_eval(self, t)

    def reversed(self) -> "Schedule":
        return Schedule(self.L1, self.L0, self.T)


def schedule_eval(schedule: Schedule, t: float) -> float:
    """Plate separation at time t.

    The endpoints are returned exactly for |t| >= T; tan is never
    evaluated at +-pi/2.
    """
    if t <= -schedule.T:
        return schedule.L0
    if t >= schedule.T:
        return schedule.L1
    s = math.tanh(math.tan(0.5 * math.pi * t / schedule.T))
    return 0.5 * (1.0 - s) * schedule.L0 + 0.5 * (1.0 + s) * schedule.L1


def mode_frequency(n: int, k: float, length: float) -> float:
    """omega for standing-wave index n and transverse momentum k."""
    if n < 1:
        raise ValueError(f"mode index must be >= 1, got {n}")
    if k < 0.0:
        raise ValueError(f"transverse momentum must be >= 0, got {k}")
    if length <= 0.0:
        raise ValueError(f"length must be positive, got {length}")
    return math.hypot(k, n * math.pi / length)


def sudden_beta_magnitude(n: int, k: float, l0: float, l1: float) -> float:
    """|beta| for an instantaneous jump L0 -> L1.

    Matching f and f' across the jump gives
    |beta| = |omega_in - omega_out| / (2 sqrt(omega_in omega_out)).
    """
    w_in = mode_frequency(n, k, l0)
    w_out = mode_frequency(n, k, l1)
    return abs(w_in - w_out) / (2.0 * math.sqrt(w_in * w_out))


@dataclass(frozen=True)
class BogoliubovResult:
    """Outcome of evolving one mode through a schedule."""

    n: int
    k: float
    half_duration: float
    omega_in: float
    omega_out: float
    alpha: complex
    beta: complex
    wronskian_drift: float
    particle_number: float = field(init=False)
    energy_final: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "particle_number", abs(self.beta) ** 2)
        object.__setattr__(
            self, "energy_final", self.omega_out * (self.particle_number + 0.5)
        )

    @property
    def normalization_defect(self) -> float:
        """|alpha|^2 - |beta|^2 - 1, zero up to integrator tolerance."""
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2 - 1.0


def evolve_mode(
    schedule: Schedule,
    n: int,
    k: float = 0.0,
    rtol: float = 1e-11,
    atol: float = 1e-13,
    wronskian_tol: float = 1e-8,
) -> BogoliubovResult:
    """Integrate one mode across the schedule and extract (alpha, beta).

    Raises IntegrationFailure if the solver stops early (the failure time
    is attached), WronskianViolation if the conserved Wronskian drifts by
    more than wronskian_tol anywhere along the trajectory.
    """
    if rtol > 1e-10:
        raise ValueError(f"rtol must be <= 1e-10 for phase accuracy, got {rtol}")
    w_in = mode_frequency(n, k, schedule.L0)
    w_out = mode_frequency(n, k, schedule.L1)

    if schedule.L0 == schedule.L1:
        return BogoliubovResult(
            n=n, k=k, half_duration=schedule.T, omega_in=w_in, omega_out=w_out,
            alpha=1.0 + 0.0j, beta=0.0 + 0.0j, wronskian_drift=0.0,
        )

    t0, t1 = -schedule.T, schedule.T
    f0 = cmath.exp(1j * w_in * schedule.T) / math.sqrt(2.0 * w_in)
    g0 = -1j * w_in * f0
    y0 = np.array([f0.real, f0.imag, g0.real, g0.imag])

    def omega_sq(t):
        length = schedule_eval(schedule, t)
        return k * k + (n * math.pi / length) ** 2

    def rhs(t, y):
        w2 = omega_sq(t)
        return np.array([y[2], y[3], -w2 * y[0], -w2 * y[1]])

    w_max = mode_frequency(n, k, min(schedule.L0, schedule.L1))
    sol = solve_ivp(
        rhs, (t0, t1), y0, method="DOP853", rtol=rtol, atol=atol,
        max_step=0.25 * 2.0 * math.pi / w_max, dense_output=True,
    )
    if not sol.success:
        reached = float(sol.t[-1]) if sol.t.size else t0
        raise IntegrationFailure(
            f"mode (n={n}, k={k}) integration stopped at t={reached:.6g}: {sol.message}",
            time=reached,
        )

    samples = sol.sol(np.linspace(t0, t1, _WRONSKIAN_SAMPLES))
    fr, fi, gr, gi = samples
    wronskian = -2.0 * (fr * gi - fi * gr)
    drift = float(np.max(np.abs(wronskian - 1.0)))
    if drift > wronskian_tol:
        raise WronskianViolation(
            f"mode (n={n}, k={k}): Wronskian drift {drift:.3e} exceeds {wronskian_tol:.3e}"
        )

    f1 = complex(sol.y[0, -1], sol.y[1, -1])
    g1 = complex(sol.y[2, -1], sol.y[3, -1])
    root = math.sqrt(0.5 * w_out)
    alpha = root * (f1 + 1j * g1 / w_out) * cmath.exp(1j * w_out * schedule.T)
    beta = root * (f1 - 1j * g1 / w_out) * cmath.exp(-1j * w_out * schedule.T)
    return BogoliubovResult(
        n=n, k=k, half_duration=schedule.T, omega_in=w_in, omega_out=w_out,
        alpha=alpha, beta=beta, wronskian_drift=drift,
    )


@dataclass(frozen=True)
class ScanResult:
    """Particle production versus schedule duration."""

    rows: tuple[BogoliubovResult, ...]
    decay_exponent: float
    threshold_half_duration: float
    target: float


def adiabatic_scan(
    l0: float,
    l1: float,
    half_durations,
    n: int = 1,
    k: float = 0.0,
    target: float = 1e-6,
    rtol: float = 1e-11,
    atol: float = 1e-13,
    wronskian_tol: float = 1e-8,
) -> ScanResult:
    """Evolve one mode over a ladder of schedule durations.

    The durations must be increasing with at least three entries.
    |beta|^2 must decrease from the second entry onward (pairs where both
    values sit below the integrator noise floor are exempt); a violation
    raises ScanQualityError rather than being reported as data.

    decay_exponent is the local power-law slope between the two largest
    durations; threshold_half_duration estimates the T at which |beta|^2
    crosses `target`, by interpolation if the scan brackets it and by
    extrapolation at the fitted slope otherwise.
    """
    times = [float(t) for t in half_durations]
    if len(times) < 3:
        raise ValueError("need at least three durations")
    if any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError("durations must be strictly increasing")

    rows = tuple(
        evolve_mode(Schedule(l0, l1, t), n, k, rtol=rtol, atol=atol,
                    wronskian_tol=wronskian_tol)
        for t in times
    )
    numbers = [r.particle_number for r in rows]

    for i in range(1, len(numbers) - 1):
        a, b = numbers[i], numbers[i + 1]
        if b >= a and max(a, b) > _NOISE_FLOOR:
            raise ScanQualityError(
                f"|beta|^2 not decreasing: {a:.3e} -> {b:.3e} between "
                f"T={times[i]:g} and T={times[i + 1]:g}"
            )

    decay_exponent = _local_exponent(times[-2], numbers[-2], times[-1], numbers[-1])
    threshold = _threshold_duration(times, numbers, target, decay_exponent)
    return ScanResult(rows=rows, decay_exponent=decay_exponent,
                      threshold_half_duration=threshold, target=target)


def _local_exponent(t_a, p_a, t_b, p_b):
    if p_a <= 0.0 or p_b <= 0.0:
        return math.inf
    return math.log(p_a / p_b) / math.log(t_b / t_a)


def _threshold_duration(times, numbers, target, exponent):
    below = [p < target for p in numbers]
    if below[0]:
        return times[0]
    for i in range(1, len(numbers)):
        if below[i]:
            if numbers[i] <= 0.0:
                return times[i]
            # log-log interpolation inside the bracketing pair
            slope = _local_exponent(times[i - 1], numbers[i - 1], times[i], numbers[i])
            return times[i - 1] * (numbers[i - 1] / target) ** (1.0 / slope)
    if not math.isfinite(exponent) or exponent <= 0.0:
        return math.inf
    return times[-1] * (numbers[-1] / target) ** (1.0 / exponent)


def vacuum_energy_shift(schedule: Schedule, modes, **evolve_kwargs) -> list[dict]:
    """Per-mode energy bookkeeping after the schedule completes.

    For each (n, k) pair, reports the static zero-point shift
    (omega_out - omega_in) / 2 and the adiabaticity violation
    omega_out |beta|^2 (excess energy above the final vacuum).  Modes are
    processed independently; row order follows input order.
    """
    report = []
    for n, k in modes:
        result = evolve_mode(schedule, int(n), float(k), **evolve_kwargs)
        report.append({
            "n": result.n,
            "k": result.k,
            "omega_in": result.omega_in,
            "omega_out": result.omega_out,
            "zero_point_shift": 0.5 * (result.omega_out - result.omega_in),
            "adiabatic_violation": result.omega_out * result.particle_number,
            "particle_number": result.particle_number,
            "wronskian_drift": result.wronskian_drift,
        })
    return report


def transverse_momentum_grid(k_max: float, count: int, decades: float = 2.0):
    """k = 0 plus a logarithmic ladder up to k_max, `count` points total."""
    if k_max <= 0.0 or count < 2:
        raise ValueError("need k_max > 0 and count >= 2")
    ladder = np.geomspace(k_max * 10.0 ** (-decades), k_max, count - 1)
    return np.concatenate([[0.0], ladder])
