"""Command-line interface.

Subcommands: point, sweep, regions, wavefunction, verify.  Exit status 0 on
success, 1 on a runtime/physics failure (boundary energy, failed verification,
unwritable output), 2 on usage errors (argparse).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Iterable, Sequence

import numpy as np

from . import __version__
from .algebra import beta_matrices, trilinear_residual
from .errors import DkpScatterError
from .oracle import numeric_rt
from .scattering import (
    Particle,
    Potential,
    Region,
    boundary_eps,
    classify_region,
    critical_energies,
    hypergeometric_parameters,
    kinematics,
    scattering_coefficients,
    step_rt,
    _abs_sq_ratio,
    _coefficient_args,
)
from .wavefield import component_residuals, wavefunction

__all__ = ["main"]


def _fmt12(value: complex | float) -> str:
    """12 significant digits; complex rendered as re+imj only when the
    imaginary part is nonzero."""
    if isinstance(value, complex):
        if value.imag == 0.0:
            return f"{value.real:.12g}"
        return f"{value.real:.12g}{value.imag:+.12g}j"
    return f"{value:.12g}"


def _csv_float(value: float) -> str:
    # shortest round-trip representation
    return repr(float(value))


def _emit(lines: Iterable[str], out_path: str | None) -> None:
    """Write lines (LF, UTF-8) to stdout or to a file; a file that fails
    mid-write is removed rather than left partial."""
    if out_path is None:
        for line in lines:
            sys.stdout.write(line + "\n")
        return
    fh = None
    try:
        fh = open(out_path, "w", encoding="utf-8", newline="")
        for line in lines:
            fh.write(line + "\n")
        fh.close()
        fh = None
    except BaseException:
        if fh is not None:
            fh.close()
        if os.path.exists(out_path):
            os.remove(out_path)
        raise


def _pot(args: argparse.Namespace) -> Potential:
    return Potential(a=args.a, b=args.b)


def _particle(args: argparse.Namespace) -> Particle:
    return Particle(m=args.m)


def _cmd_point(args: argparse.Namespace) -> int:
    pot, par = _pot(args), _particle(args)
    result = scattering_coefficients(pot, par, args.E)
    k = kinematics(pot, par, args.E)
    print(f"E = {_fmt12(args.E)}")
    print(f"region = {result.region.token}")
    print(f"nu = {_fmt12(k.nu)}")
    print(f"mu = {_fmt12(k.mu)}")
    print(f"R = {_fmt12(result.R)}")
    print(f"T = {_fmt12(result.T)}")
    print(f"R+T-1 = {_fmt12(result.unitarity_defect)}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    pot, par = _pot(args), _particle(args)
    if args.steps < 2:
        raise DkpScatterError("sweep needs at least 2 steps")
    if not args.emin < args.emax:
        raise DkpScatterError("sweep needs emin < emax")
    rows = ["E,R,T,unitarity_defect,region"]
    for energy in np.linspace(args.emin, args.emax, args.steps):
        energy = float(energy)
        region = classify_region(pot, par, energy)
        if region is Region.BOUNDARY:
            print(f"skipping E = {_fmt12(energy)}: within boundary guard",
                  file=sys.stderr)
            continue
        res = scattering_coefficients(pot, par, energy)
        rows.append(",".join((
            _csv_float(energy), _csv_float(res.R), _csv_float(res.T),
            _csv_float(res.unitarity_defect), res.region.token)))
    _emit(rows, args.out)
    return 0


def _cmd_regions(args: argparse.Namespace) -> int:
    pot, par = _pot(args), _particle(args)
    crits = critical_energies(pot, par)
    print("boundaries: " + " ".join(_fmt12(c) for c in crits))
    spanr = max(1.0, par.m)
    edges = [crits[0] - spanr, *crits, crits[-1] + spanr]
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi - lo <= 2 * boundary_eps():
            label = "empty"
            span = f"{_fmt12(lo if lo in crits else hi)}"
            print(f"(degenerate band at E = {span}: {label})")
            continue
        mid = 0.5 * (lo + hi)
        token = classify_region(pot, par, mid).token
        if lo == edges[0]:
            print(f"{token}: E < {_fmt12(hi)}")
        elif hi == edges[-1]:
            print(f"{token}: E > {_fmt12(lo)}")
        else:
            print(f"{token}: {_fmt12(lo)} < E < {_fmt12(hi)}")
    return 0


def _cmd_wavefunction(args: argparse.Namespace) -> int:
    pot, par = _pot(args), _particle(args)
    if args.samples < 2:
        raise DkpScatterError("wavefunction needs at least 2 samples")
    if not args.xmin < args.xmax:
        raise DkpScatterError("wavefunction needs xmin < xmax")
    rows = ["x,re_psi,im_psi,re_phi,im_phi,re_theta,im_theta"]
    for x in np.linspace(args.xmin, args.xmax, args.samples):
        x = float(x)
        trip = wavefunction(x, args.kind, pot, par, args.E)
        rows.append(",".join((
            _csv_float(x),
            _csv_float(trip.psi.real), _csv_float(trip.psi.imag),
            _csv_float(trip.phi.real), _csv_float(trip.phi.imag),
            _csv_float(trip.theta.real), _csv_float(trip.theta.imag))))
    _emit(rows, args.out)
    return 0


def _flipped_mu_rt(pot: Potential, par: Particle, energy: float):
    # debug path: negate mu before the connection coefficients
    k = kinematics(pot, par, energy)
    k = k._replace(mu=-k.mu)
    hp = hypergeometric_parameters(k)
    a_nums, a_dens, c_nums, c_dens = _coefficient_args(hp)
    refl = _abs_sq_ratio(c_nums + a_dens, c_dens + a_nums)
    trans = (k.mu.real / k.nu.real) * _abs_sq_ratio(a_dens, a_nums)
    return refl, trans


class _Verifier:
    def __init__(self) -> None:
        self.failures = 0

    def check(self, name: str, ok: bool, detail: str) -> None:
        status = "PASS" if ok else "FAIL"
        if not ok:
            self.failures += 1
        print(f"{status} {name}: {detail}")


def _cmd_verify(args: argparse.Namespace) -> int:
    pot = Potential(a=5.0, b=3.0)
    par = Particle(m=1.0)
    v = _Verifier()
    quick = args.quick

    grids = {
        Region.I: np.linspace(6.2, 9.8, 8 if quick else 40),
        Region.III: np.linspace(-3.8, 3.8, 8 if quick else 40),
        Region.V: np.linspace(-9.8, -6.2, 8 if quick else 40),
    }
    worst = 0.0
    for energies in grids.values():
        for energy in energies:
            res = scattering_coefficients(pot, par, float(energy))
            worst = max(worst, abs(res.unitarity_defect))
    v.check("unitarity", worst <= 1e-10,
            f"max |R+T-1| = {worst:.3e} over propagating bands (limit 1e-10)")

    energies = (2.5, 7.0) if quick else (1.5, 2.5, 3.5, 0.0, -2.0, 6.5, 7.0, 8.5)
    worst = 0.0
    for energy in energies:
        num = numeric_rt(pot, par, energy)
        if args.flip_mu_sign:
            refl, trans = _flipped_mu_rt(pot, par, energy)
        else:
            res = scattering_coefficients(pot, par, energy)
            refl, trans = res.R, res.T
        worst = max(worst, abs(refl - num.R), abs(trans - num.T))
    v.check("oracle-equivalence", worst <= 1e-6,
            f"max |analytic - integrated| = {worst:.3e} over {len(energies)} "
            "energies (limit 1e-6)")

    worst = 0.0
    sharp = Potential(a=5.0, b=1e4)
    for energy in (2.5, 7.0) if quick else (2.5, 3.0, 7.0, 8.0):
        res = scattering_coefficients(sharp, par, energy)
        ref = step_rt(5.0, 1.0, energy)
        worst = max(worst, abs(res.R - ref.R), abs(res.T - ref.T))
    v.check("step-limit", worst <= 1e-4,
            f"max |tanh(b=1e4) - sharp step| = {worst:.3e} (limit 1e-4)")

    betas = beta_matrices()
    tri = trilinear_residual(betas)
    b0 = betas.beta0
    cube = float(np.abs(b0 @ b0 @ b0 - b0).max())
    rank = int(np.linalg.matrix_rank(b0))
    trace = abs(complex(np.trace(b0)))
    ok = tri <= 1e-13 and cube <= 1e-13 and rank == 6 and trace <= 1e-13
    v.check("matrix-algebra", ok,
            f"trilinear {tri:.1e}, cube {cube:.1e}, rank {rank}, trace {trace:.1e}")

    free = Potential(a=0.0, b=1.0)
    res_free = component_residuals(0.7, "transmitted", free, Particle(m=1.0), 2.0, 1e-4)
    res_full = component_residuals(0.3, "transmitted", pot, par, 7.0, 1e-4)
    ok = max(res_free) <= 1e-6 and res_full.r_phi == 0.0 \
        and res_full.r_theta <= 1e-5 and res_full.r_kg <= 1e-4
    v.check("component-residuals", ok,
            f"free max {max(res_free):.2e} (limit 1e-6), "
            f"full (r_phi={res_full.r_phi:.1e}, r_theta={res_full.r_theta:.2e}, "
            f"r_kg={res_full.r_kg:.2e})")

    r2 = scattering_coefficients(pot, par, 5.0)
    r4 = scattering_coefficients(pot, par, -5.0)
    ok = r2.R == 1.0 and r2.T == 0.0 and r4.R == 1.0 and r4.T == 0.0
    v.check("evanescent-bands", ok,
            f"region II (R,T)=({r2.R},{r2.T}), region IV (R,T)=({r4.R},{r4.T})")

    total = 6
    if v.failures:
        print(f"{v.failures} of {total} checks failed")
        return 1
    print(f"all {total} checks passed")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dkpscatter",
        description="Spin-one scattering on the smooth step V(x) = a tanh(bx)")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pot(p: argparse.ArgumentParser, need_b: bool = True) -> None:
        p.add_argument("--a", type=float, required=True, help="step height a")
        p.add_argument("--b", type=float, required=need_b, default=1.0,
                       help="step steepness b > 0" + ("" if need_b else " (default 1)"))
        p.add_argument("--m", type=float, required=True, help="particle mass m > 0")

    p = sub.add_parser("point", help="R and T at one energy")
    add_pot(p)
    p.add_argument("--E", type=float, required=True, help="energy")
    p.set_defaults(func=_cmd_point)

    p = sub.add_parser("sweep", help="R(E), T(E) table over an energy window")
    add_pot(p)
    p.add_argument("--emin", type=float, required=True)
    p.add_argument("--emax", type=float, required=True)
    p.add_argument("--steps", type=int, required=True,
                   help="number of energy samples (endpoints included)")
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("regions", help="energy-band boundaries and labels")
    add_pot(p, need_b=False)
    p.set_defaults(func=_cmd_regions)

    p = sub.add_parser("wavefunction", help="sampled wave components on a grid")
    add_pot(p)
    p.add_argument("--E", type=float, required=True, help="energy")
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--kind", choices=("incident", "reflected", "transmitted"),
                   required=True)
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.set_defaults(func=_cmd_wavefunction)

    p = sub.add_parser("verify", help="self-check battery")
    p.add_argument("--quick", action="store_true",
                   help="reduced grids, finishes in a few seconds")
    p.add_argument("--flip-mu-sign", action="store_true",
                   help="debug: negate mu in the analytic route "
                        "(verification must then fail)")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DkpScatterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
