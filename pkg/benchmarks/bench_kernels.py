"""Timing comparison of the jitted kernels against the pure-Python fallback.

Run as a script: times three workloads in-process, then re-invokes itself in
a subprocess with the opposite DKP_DISABLE_JIT setting and prints both sets
side by side.  `--single` restricts to the in-process half (used for the
child invocation).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def _workloads():
    import dkpscatter as dk

    pot = dk.Potential(a=5.0, b=3.0)
    par = dk.Particle(m=1.0)

    def w_hyp2f1() -> float:
        k = dk.kinematics(pot, par, 7.0)
        hp = dk.hypergeometric_parameters(k)
        total = 0.0
        for x in np.linspace(-2.0, 2.0, 400):
            z = -float(np.exp(2 * pot.b * x))
            total += abs(dk.hyp2f1(hp.a1, hp.b1, hp.c1, z))
        return total

    def w_log_gamma() -> float:
        rng = np.random.default_rng(3)
        pts = rng.uniform(-40, 40, size=(4000, 2))
        total = 0.0
        for re, im in pts:
            if abs(im) < 1e-3:
                im = 1e-3
            total += dk.log_gamma(complex(re, im)).real
        return total

    def w_numeric_rt() -> float:
        total = 0.0
        for energy in (1.5, 2.5, 3.5, 7.0, 8.5):
            total += dk.numeric_rt(pot, par, energy).R
        return total

    return [("hyp2f1 sweep (400 evals)", w_hyp2f1),
            ("log_gamma grid (4000 evals)", w_log_gamma),
            ("numeric_rt (5 energies)", w_numeric_rt)]


def run_single() -> None:
    import dkpscatter as dk

    mode = "jit" if dk.JIT_ENABLED else "fallback"
    for name, fn in _workloads():
        fn()  # warm-up: triggers compilation in jit mode
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        print(f"RESULT\t{mode}\t{name}\t{dt:.6f}")


def run_compare() -> None:
    here_disabled = os.environ.get("DKP_DISABLE_JIT", "").strip().lower() in (
        "1", "true", "yes", "on")
    env = dict(os.environ)
    if here_disabled:
        env.pop("DKP_DISABLE_JIT", None)
    else:
        env["DKP_DISABLE_JIT"] = "1"

    lines: list[str] = []
    buf = _Capture(lines)
    stdout0 = sys.stdout
    sys.stdout = buf
    try:
        run_single()
    finally:
        sys.stdout = stdout0

    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--single"],
        env=env, capture_output=True, text=True, check=True)
    lines += proc.stdout.splitlines()

    timings: dict[str, dict[str, float]] = {}
    for line in lines:
        if not line.startswith("RESULT\t"):
            continue
        _, mode, name, dt = line.split("\t")
        timings.setdefault(name, {})[mode] = float(dt)

    width = max(len(n) for n in timings)
    print(f"{'workload':<{width}}  {'jit (s)':>10}  {'fallback (s)':>13}  {'speedup':>8}")
    for name, modes in timings.items():
        jit = modes.get("jit", float("nan"))
        fb = modes.get("fallback", float("nan"))
        print(f"{name:<{width}}  {jit:>10.4f}  {fb:>13.4f}  {fb / jit:>7.1f}x")


class _Capture:
    def __init__(self, sink: list[str]) -> None:
        self._sink = sink
        self._partial = ""

    def write(self, text: str) -> None:
        self._partial += text
        while "\n" in self._partial:
            line, self._partial = self._partial.split("\n", 1)
            self._sink.append(line)

    def flush(self) -> None:
        pass


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--single", action="store_true",
                        help="time only the current process mode")
    args = parser.parse_args()
    if args.single:
        run_single()
    else:
        run_compare()
    return 0


if __name__ == "__main__":
    sys.exit(main())
