"""Command-line front end.

Four subcommands expose the computational layers:

    cocycle         exact bracket-table diagnostics, cocycle feasibility, JSON report
    algebra-verify  lattice boost/translation commutator checks, convergence CSV
    casimir         plate energies by all routes, cross-checked, CSV
    adiabatic       mode evolution scans, CSV

Exit codes: 0 success, 2 bad input (malformed files, invalid parameters),
3 numerical cross-check failure, 4 integrator or scan-quality failure.

Every subcommand accepts --outdir, --seed, and --config.  The config file
is INI-style with one section per subcommand; keys are the long flag
names without the leading dashes.  Command-line flags override the file.
CSV output uses 12-significant-digit scientific notation and unix line
endings, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import json
import math
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import adiabatic as ad
from . import algebra as alg
from . import casimir as cas
from . import lattice as lat

_FLOAT_FMT = "%.11e"

_DEFAULTS = {
    "cocycle": {"selftest": 0},
    "algebra-verify": {
        "physical-size": 8.0,
        "spacings": "0.2,0.1,0.05",
        "mass0": math.pi,
        "mass1": math.pi / 2.0,
        "order-min": 1.9,
        "scalar-tol": 1e-9,
        "closure-size": 16,
        "closure-mass": 1.0,
        "closure-tol": 1e-10,
    },
    "casimir": {"cross-tol": 1e-8},
    "adiabatic": {"T": "2,4,8", "n": 1, "k": 0.0, "wronskian-tol": 1e-8},
}

_PARSERS = {
    "selftest": int,
    "physical-size": float,
    "mass0": float,
    "mass1": float,
    "order-min": float,
    "scalar-tol": float,
    "closure-size": int,
    "closure-mass": float,
    "closure-tol": float,
    "cross-tol": float,
    "n": int,
    "k": float,
    "wronskian-tol": float,
    "L0": float,
    "L1": float,
    "seed": int,
    "diff": lambda s: s.strip().lower() in ("1", "true", "yes", "on"),
    "sudden-check": lambda s: s.strip().lower() in ("1", "true", "yes", "on"),
    "L": lambda s: [float(x) for x in s.split(";")],
    "charges-raw": lambda s: [x.strip() for x in s.split(";")],
}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _write_csv(path: Path, header, rows):
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _fmt(value: float) -> str:
    return _FLOAT_FMT % value


# ---------------------------------------------------------------------------
# argument plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platevac",
        description="Central charges from plate vacua: exact cocycle algebra, "
        "lattice commutators, regularized plate energies, mode evolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--outdir", default=".", help="directory for output files")
        p.add_argument("--config", default=None, help="INI config file")
        p.add_argument("--seed", type=int, default=None, help="random seed")

    p = sub.add_parser("cocycle", help="exact algebra and cocycle diagnostics")
    common(p)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", default=None,
                     help="builtin algebra name (e.g. poincare21, abelian2)")
    src.add_argument("--algebra-file", default=None, help="algebra data file")
    p.add_argument("--charges", default=None,
                   help="c0,c1,c2 charge triple (poincare21 only)")
    p.add_argument("--charges-raw", action="append", default=None,
                   metavar="A,B=VALUE", help="explicit cocycle entry; repeatable")
    p.add_argument("--cocycle-file", default=None, help="cocycle data file")
    p.add_argument("--selftest", type=int, default=None, metavar="N",
                   help="run N random charge triples through the solver")

    p = sub.add_parser("algebra-verify", help="lattice commutator verification")
    common(p)
    p.add_argument("--physical-size", type=float, default=None)
    p.add_argument("--spacings", default=None, help="comma-separated spacings")
    p.add_argument("--mass0", type=float, default=None)
    p.add_argument("--mass1", type=float, default=None)
    p.add_argument("--order-min", type=float, default=None,
                   help="minimum accepted convergence order")
    p.add_argument("--scalar-tol", type=float, default=None,
                   help="relative tolerance on the scalar slot")
    p.add_argument("--check", choices=["poincare"], default=None,
                   help="run the periodic closure residual check instead")
    p.add_argument("--closure-size", type=int, default=None)
    p.add_argument("--closure-mass", type=float, default=None)
    p.add_argument("--closure-tol", type=float, default=None)
    p.add_argument("--demo", choices=["contradiction"], default=None,
                   help="print the positive vacuum-energy lower bound")

    p = sub.add_parser("casimir", help="plate energies, all routes")
    common(p)
    p.add_argument("--L", action="append", type=float, default=None,
                   help="plate separation; repeatable")
    p.add_argument("--diff", action="store_true", default=None,
                   help="add energy-difference column relative to the first L")
    p.add_argument("--cross-tol", type=float, default=None,
                   help="relative tolerance between zeta and contour routes")

    p = sub.add_parser("adiabatic", help="mode evolution through the schedule")
    common(p)
    p.add_argument("--L0", type=float, default=None)
    p.add_argument("--L1", type=float, default=None)
    p.add_argument("--T", default=None, help="comma-separated half-durations")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=float, default=None)
    p.add_argument("--sudden-check", action="store_true", default=None,
                   help="compare the integrator against the closed-form sudden limit")
    p.add_argument("--wronskian-tol", type=float, default=None)

    return parser


def _apply_config(opts: dict, command: str) -> dict:
    """Fill unset options from the config file, then from defaults."""
    merged = dict(opts)
    path = merged.get("config")
    if path:
        ini = configparser.ConfigParser()
        ini.optionxform = str  # keys like L0 are case-sensitive
        read = ini.read(path)
        if not read:
            raise ValueError(f"config file not found: {path}")
        if ini.has_section(command):
            known = {k.replace("_", "-") for k in merged}
            for key, raw in ini.items(command):
                if key not in known:
                    raise ValueError(f"unknown key {key!r} in config section [{command}]")
                dest = key.replace("-", "_")
                if merged.get(dest) is None:
                    merged[dest] = _PARSERS.get(key, str)(raw)
    for key, value in _DEFAULTS.get(command, {}).items():
        dest = key.replace("-", "_")
        if merged.get(dest) is None:
            merged[dest] = value
    if merged.get("outdir") is None:
        merged["outdir"] = "."
    return merged


# ---------------------------------------------------------------------------
# cocycle subcommand


def _resolve_algebra(opts):
    if opts.get("algebra_file"):
        algebra = alg.load_algebra(opts["algebra_file"])
        return algebra, None
    name = opts.get("builtin") or "poincare21"
    try:
        return alg.builtin_algebra(name), name
    except KeyError as exc:
        raise ValueError(str(exc)) from exc


def _resolve_cocycle(algebra, builtin, opts):
    given = [k for k in ("charges", "charges_raw", "cocycle_file") if opts.get(k)]
    if len(given) > 1:
        raise ValueError("give at most one of --charges, --charges-raw, --cocycle-file")
    if opts.get("charges"):
        if builtin != "poincare21":
            raise ValueError("--charges applies to the poincare21 algebra only")
        parts = opts["charges"].split(",")
        if len(parts) != 3:
            raise ValueError("--charges needs exactly three rationals c0,c1,c2")
        return alg.shift_cocycle(*(_rational(p) for p in parts))
    if opts.get("charges_raw"):
        entries = {}
        for item in opts["charges_raw"]:
            head, _, value = item.partition("=")
            labels = [x.strip() for x in head.split(",")]
            if len(labels) != 2 or not value:
                raise ValueError(f"bad --charges-raw entry {item!r}, want A,B=value")
            entries[(labels[0], labels[1])] = _rational(value)
        return alg.TwoCocycle.from_entries(algebra.labels, entries)
    if opts.get("cocycle_file"):
        cocycle = alg.load_cocycle(opts["cocycle_file"])
        if cocycle.labels != algebra.labels:
            raise ValueError(
                f"cocycle basis {cocycle.labels} does not match algebra basis "
                f"{algebra.labels}"
            )
        return cocycle
    return None


def _selftest(algebra, trials, seed):
    rng = random.Random(seed if seed is not None else 0)
    failures = 0
    for _ in range(trials):
        charges = [
            Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(3)
        ]
        cocycle = alg.shift_cocycle(*charges)
        if alg.cocycle_check(algebra, cocycle) != 0:
            failures += 1
            continue
        result = alg.coboundary_solve(algebra, cocycle)
        if not result.feasible:
            failures += 1
            continue
        if result.certificate.induced_cocycle(algebra).c != cocycle.c:
            failures += 1
    return {"trials": trials, "failures": failures}


def cmd_cocycle(opts) -> int:
    algebra, builtin = _resolve_algebra(opts)
    report = {
        "algebra": {
            "builtin": builtin,
            "dim": algebra.dim,
            "labels": list(algebra.labels),
        },
        "jacobi_residual": _fraction_str(alg.jacobi_check(algebra)),
        "h2_dimension": alg.h2_dimension(algebra),
        "cocycle": None,
        "cocycle_residual": None,
        "feasible": None,
        "certificate": None,
        "kernel_dim": None,
        "rank_deficit": None,
    }

    cocycle = _resolve_cocycle(algebra, builtin, opts)
    if cocycle is not None:
        entries = {}
        for i, a in enumerate(algebra.labels):
            for j in range(i + 1, algebra.dim):
                value = cocycle.c[i][j]
                if value != 0:
                    entries[f"{a},{algebra.labels[j]}"] = _fraction_str(value)
        report["cocycle"] = entries
        residual = alg.cocycle_check(algebra, cocycle)
        report["cocycle_residual"] = _fraction_str(residual)
        if residual == 0:
            solved = alg.coboundary_solve(algebra, cocycle)
            report["feasible"] = solved.feasible
            report["kernel_dim"] = solved.kernel_dim
            report["rank_deficit"] = solved.rank_deficit
            if solved.certificate is not None:
                report["certificate"] = {
                    label: _fraction_str(value)
                    for label, value in zip(algebra.labels, solved.certificate.alpha)
                }

    status = 0
    if opts["selftest"]:
        if builtin != "poincare21":
            raise ValueError("--selftest runs on the poincare21 algebra only")
        outcome = _selftest(algebra, opts["selftest"], opts.get("seed"))
        report["selftest"] = outcome
        if outcome["failures"]:
            status = 3

    outdir = Path(opts["outdir"])
    outdir.mkdir(parents=True, exist_ok=True)
    out = outdir / "cocycle_report.json"
    with open(out, "w") as handle:
        json.dump(report, handle, indent=2, sort_keys=True)
        handle.write("\n")

    verdict = report["feasible"]
    if verdict is not None:
        print(f"cocycle: {'coboundary (removable)' if verdict else 'not a coboundary'}")
    print(f"report written to {out}")
    return status


# ---------------------------------------------------------------------------
# algebra-verify subcommand


def cmd_algebra_verify(opts) -> int:
    outdir = Path(opts["outdir"])
    outdir.mkdir(parents=True, exist_ok=True)

    if opts.get("demo") == "contradiction":
        geom = lat.LatticeGeometry(1, opts["closure_size"], 0.5, boundary="periodic")
        demo = lat.contradiction_demo(geom, opts["closure_mass"])
        print(f"modes: {demo['n_modes']}")
        print(f"vacuum energy (trace route):     {_fmt(demo['vev_trace_route'])}")
        print(f"vacuum energy (mode sum):        {_fmt(demo['ground_energy'])}")
        print(f"positive lower bound M*m_min/2:  {_fmt(demo['lower_bound'])}")
        print("vacuum energy > 0: PASS" if demo["ground_energy"] >= demo["lower_bound"]
              else "vacuum energy > 0: FAIL")
        return 0

    if opts.get("check") == "poincare":
        geom = lat.LatticeGeometry(2, opts["closure_size"], 0.5, boundary="periodic")
        residuals = lat.verify_poincare_closure(geom, opts["closure_mass"])
        rows = [(pair, _fmt(value)) for pair, value in residuals.items()]
        _write_csv(outdir / "closure_residuals.csv", ("pair", "residual_norm"), rows)
        gated = ["H,P1", "H,P2", "P1,P2", "J,H bulk"]
        worst = max(residuals[p] for p in gated)
        ok = worst < opts["closure_tol"]
        for pair, value in residuals.items():
            print(f"  [{pair}] residual norm {_fmt(value)}")
        print(f"closure residuals < {opts['closure_tol']:g}: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 3

    spacings = [float(s) for s in str(opts["spacings"]).split(",")]
    sweep = lat.central_relation_convergence(
        opts["physical_size"], spacings, (opts["mass0"], opts["mass1"])
    )
    header = ("spacing", "mass", "sites", "scalar_slot", "ground_energy_trace",
              "scalar_discrepancy_rel", "bulk_residual_norm", "full_residual_norm")
    rows = []
    worst_scalar = 0.0
    for spacing, report in zip(sweep["spacings"], sweep["reports"]):
        for row in report["per_label"]:
            rows.append((
                _fmt(spacing), _fmt(row["mass"]), row["sites"],
                _fmt(row["scalar_slot"]), _fmt(row["ground_energy_trace"]),
                _fmt(row["scalar_discrepancy_rel"]),
                _fmt(row["bulk_residual_norm"]), _fmt(row["full_residual_norm"]),
            ))
            worst_scalar = max(worst_scalar, row["scalar_discrepancy_rel"])
    _write_csv(outdir / "central_relation.csv", header, rows)

    orders = sweep["bulk_orders"]
    order_ok = all(o >= opts["order_min"] for o in orders)
    scalar_ok = worst_scalar <= opts["scalar_tol"]
    masses = (opts["mass0"], opts["mass1"])
    for mass, order in zip(masses, orders):
        print(f"  bulk convergence order (mass {mass:g}): {order:.4f}")
    print(f"  worst scalar-slot relative discrepancy: {_fmt(worst_scalar)}")
    verdict = "PASS" if (order_ok and scalar_ok) else "FAIL"
    print(f"central relation (order >= {opts['order_min']:g}, "
          f"scalar tol {opts['scalar_tol']:g}): {verdict}")
    return 0 if verdict == "PASS" else 3


# ---------------------------------------------------------------------------
# casimir subcommand


def cmd_casimir(opts) -> int:
    lengths = opts.get("L") or [1.0]
    if isinstance(lengths, float):
        lengths = [lengths]
    outdir = Path(opts["outdir"])
    outdir.mkdir(parents=True, exist_ok=True)

    header = ["L", "method", "energy_per_area", "error_estimate", "force_per_area"]
    if opts.get("diff"):
        header.append("central_charge_diff_vs_first")

    rows = []
    first = {}
    cross_ok = True
    for length in lengths:
        force = cas.casimir_force_per_area(length)
        per_method = {}
        for method in cas.METHODS:
            result = cas.casimir_energy_per_area(length, method)
            per_method[method] = result
            row = [_fmt(length), method, _fmt(result.value),
                   _fmt(result.error_estimate), _fmt(force)]
            if opts.get("diff"):
                if method in first:
                    row.append(_fmt(first[method] - result.value))
                else:
                    row.append("")
                    first[method] = result.value
            rows.append(row)
        zeta = per_method["zeta"].value
        contour = per_method["abel_plana"].value
        if abs(zeta - contour) > opts["cross_tol"] * abs(zeta):
            cross_ok = False
        cutoff = per_method["cutoff_extrapolation"]
        budget = per_method["zeta"].error_estimate + cutoff.error_estimate
        if abs(zeta - cutoff.value) > budget:
            cross_ok = False

    _write_csv(outdir / "casimir.csv", header, rows)
    print(f"routes agree within tolerance: {'PASS' if cross_ok else 'FAIL'}")
    return 0 if cross_ok else 3


# ---------------------------------------------------------------------------
# adiabatic subcommand


def cmd_adiabatic(opts) -> int:
    if opts.get("L0") is None or opts.get("L1") is None:
        raise ValueError("adiabatic requires --L0 and --L1")
    times = [float(t) for t in str(opts["T"]).split(",")]
    n, k = opts["n"], opts["k"]
    outdir = Path(opts["outdir"])
    outdir.mkdir(parents=True, exist_ok=True)

    status = 0
    if opts.get("sudden_check"):
        closed = ad.sudden_beta_magnitude(n, k, opts["L0"], opts["L1"])
        run = ad.evolve_mode(ad.Schedule(opts["L0"], opts["L1"], 1e-4), n, k,
                             wronskian_tol=opts["wronskian_tol"])
        dev = abs(abs(run.beta) - closed) / closed if closed else abs(run.beta)
        print(f"sudden |beta| closed form:  {_fmt(closed)}")
        print(f"sudden |beta| integrator:   {_fmt(abs(run.beta))}")
        print(f"relative deviation:         {_fmt(dev)}")
        print(f"sudden-limit check: {'PASS' if dev <= 1e-3 else 'FAIL'}")
        if dev > 1e-3:
            status = 3

    if len(times) >= 3:
        scan = ad.adiabatic_scan(opts["L0"], opts["L1"], times, n=n, k=k,
                                 wronskian_tol=opts["wronskian_tol"])
        results = scan.rows
        print(f"decay exponent (two largest T): {scan.decay_exponent:.4f}")
        print(f"estimated T for |beta|^2 < {scan.target:g}: "
              f"{scan.threshold_half_duration:.4f}")
    else:
        results = tuple(
            ad.evolve_mode(ad.Schedule(opts["L0"], opts["L1"], t), n, k,
                           wronskian_tol=opts["wronskian_tol"])
            for t in times
        )

    header = ("n", "k", "T", "alpha_re", "alpha_im", "beta_re", "beta_im",
              "particle_number", "wronskian_drift")
    rows = [
        (r.n, _fmt(r.k), _fmt(r.half_duration),
         _fmt(r.alpha.real), _fmt(r.alpha.imag),
         _fmt(r.beta.real), _fmt(r.beta.imag),
         _fmt(r.particle_number), _fmt(r.wronskian_drift))
        for r in results
    ]
    _write_csv(outdir / "adiabatic_scan.csv", header, rows)
    print(f"scan written to {outdir / 'adiabatic_scan.csv'}")
    return status


# ---------------------------------------------------------------------------


_HANDLERS = {
    "cocycle": cmd_cocycle,
    "algebra-verify": cmd_algebra_verify,
    "casimir": cmd_casimir,
    "adiabatic": cmd_adiabatic,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _apply_config(vars(args), args.command)
        return _HANDLERS[args.command](opts)
    except (ad.IntegrationFailure, ad.WronskianViolation, ad.ScanQualityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (alg.AlgebraFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
