"""Plane-wave scattering of a spin-one particle on the smooth step
V(x) = a tanh(bx): kinematic parameters, connection coefficients, reflection
and transmission, and the sharp-step limit."""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from . import _kernels
from .errors import (
    BoundaryEnergyError,
    ChannelClosedError,
    EvanescentIncidentError,
    InvalidParameterError,
    PoleError,
)

__all__ = [
    "Potential",
    "Particle",
    "Region",
    "KinematicParams",
    "HypergeometricParams",
    "ConnectionCoefficients",
    "ScatteringResult",
    "Currents",
    "StepRT",
    "critical_energies",
    "boundary_eps",
    "kinematics",
    "classify_region",
    "hypergeometric_parameters",
    "connection_coefficients",
    "scattering_coefficients",
    "currents",
    "step_rt",
]

_DEFAULT_BOUNDARY_EPS = 1e-9


@dataclass(frozen=True)
class Potential:
    """Smooth step V(x) = a tanh(bx); height parameter a, steepness b > 0."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidParameterError("potential parameters must be finite")
        if self.b <= 0:
            raise InvalidParameterError(f"steepness b must be positive, got {self.b}")

    def value(self, x: float) -> float:
        return self.a * math.tanh(self.b * x)


@dataclass(frozen=True)
class Particle:
    """Massive spin-one particle, m > 0."""

    m: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.m) or self.m <= 0:
            raise InvalidParameterError(f"mass must be positive, got {self.m}")


class Region(Enum):
    """Energy bands of the scattering problem, labelled by the reality pattern
    of the asymptotic momenta."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    BOUNDARY = "boundary"

    @property
    def token(self) -> str:
        return self.value


class KinematicParams(NamedTuple):
    """Asymptotic wave numbers (over 2b) and the interior exponent.

    nu and mu are real (as complex with zero imaginary part) in propagating
    channels, positive-imaginary in evanescent ones; the sign of a real nu
    (mu) follows the sign of E + a (E - a).  lam is 1/2 + imaginary part for
    b < 2|a|, real in (1/2, 1] otherwise.
    """

    nu: complex
    mu: complex
    lam: complex

    @property
    def alpha(self) -> complex:
        return 1j * self.nu

    @property
    def gamma(self) -> complex:
        return 1j * self.mu


class HypergeometricParams(NamedTuple):
    a1: complex
    b1: complex
    c1: complex
    a2: complex
    b2: complex
    c2: complex


class ConnectionCoefficients(NamedTuple):
    A: complex
    B: complex
    C: complex
    D: complex


@dataclass(frozen=True)
class ScatteringResult:
    energy: float
    region: Region
    R: float
    T: float
    unitarity_defect: float


class Currents(NamedTuple):
    incident: float
    reflected: float
    transmitted: float


class StepRT(NamedTuple):
    k_incident: float
    k_transmitted: float
    R: float
    T: float


def critical_energies(pot: Potential, particle: Particle) -> tuple[float, ...]:
    """The four channel thresholds +-a +- m, sorted ascending."""
    a, m = pot.a, particle.m
    return tuple(sorted((-a - m, -a + m, a - m, a + m)))


def boundary_eps() -> float:
    """Guard half-width around the critical energies.  Overridable through
    the environment variable DKP_EPS_BOUNDARY; read on every call."""
    raw = os.environ.get("DKP_EPS_BOUNDARY", "")
    if raw.strip():
        try:
            val = float(raw)
        except ValueError:
            raise InvalidParameterError(
                f"DKP_EPS_BOUNDARY is not a number: {raw!r}") from None
        if not (0 < val < 1):
            raise InvalidParameterError(
                f"DKP_EPS_BOUNDARY out of range (0, 1): {val}")
        return val
    return _DEFAULT_BOUNDARY_EPS


def _half_wavenumber(excess: float, scale: float) -> complex:
    # sqrt(excess^2-ish)/(2b) with the sign/branch convention of the docstring
    if excess > 0:
        return complex(math.copysign(math.sqrt(excess), scale), 0.0)
    return complex(0.0, math.sqrt(-excess))


def kinematics(pot: Potential, particle: Particle, energy: float) -> KinematicParams:
    """nu, mu, lam for the given configuration.  Purely algebraic; no
    boundary guard is applied here."""
    a, b, m = pot.a, pot.b, particle.m
    e_plus = energy + a
    e_minus = energy - a
    nu = _half_wavenumber(e_plus * e_plus - m * m, e_plus) / (2.0 * b)
    mu = _half_wavenumber(e_minus * e_minus - m * m, e_minus) / (2.0 * b)
    disc = b * b - 4.0 * a * a
    if disc >= 0:
        lam = complex((b + math.sqrt(disc)) / (2.0 * b), 0.0)
    else:
        lam = complex(0.5, math.sqrt(-disc) / (2.0 * b))
    return KinematicParams(nu, mu, lam)


def classify_region(pot: Potential, particle: Particle, energy: float) -> Region:
    """Band label for the energy.

    BOUNDARY within boundary_eps() of a channel threshold, and for the band
    where both channels are evanescent (possible only for |a| < m).  Otherwise
    the label follows the reality pattern of (nu, mu): both real and above all
    thresholds I, below all V, between III; only mu imaginary II; only nu
    imaginary IV.
    """
    crits = critical_energies(pot, particle)
    eps = boundary_eps()
    for ec in crits:
        if abs(energy - ec) <= eps:
            return Region.BOUNDARY
    a, m = pot.a, particle.m
    nu_open = (energy + a) ** 2 > m * m
    mu_open = (energy - a) ** 2 > m * m
    if nu_open and mu_open:
        if energy > crits[-1]:
            return Region.I
        if energy < crits[0]:
            return Region.V
        return Region.III
    if nu_open:
        return Region.II
    if mu_open:
        return Region.IV
    return Region.BOUNDARY


def hypergeometric_parameters(k: KinematicParams) -> HypergeometricParams:
    """Parameter pairs of the two interior solutions about the left wall."""
    al, ga, lam = k.alpha, k.gamma, k.lam
    return HypergeometricParams(
        a1=al + lam - ga,
        b1=al + lam + ga,
        c1=1.0 + 2.0 * al,
        a2=-al + lam + ga,
        b2=-al + lam - ga,
        c2=1.0 - 2.0 * al,
    )


def _coefficient_args(hp: HypergeometricParams):
    # gamma-function argument lists: (numerators, denominators) for A and C
    a_nums = (1.0 - hp.b1 + hp.a1, 1.0 - hp.c1)
    a_dens = (1.0 - hp.c1 + hp.a1, 1.0 - hp.b1)
    c_nums = (1.0 - hp.a2 + hp.b2, 1.0 - hp.c2)
    c_dens = (1.0 - hp.c2 + hp.b2, 1.0 - hp.a2)
    return a_nums, a_dens, c_nums, c_dens


_POLE_TOL = 1e-14


def _is_pole(z: complex) -> bool:
    k = math.floor(z.real + 0.5)
    return k <= 0.5 and abs(z - k) <= _POLE_TOL


def _gamma_combo(nums: Sequence[complex], dens: Sequence[complex]) -> complex:
    """prod Gamma(nums) / prod Gamma(dens) as a complex value, in the log
    domain.  A denominator pole short-circuits to exactly 0.  Terms are
    accumulated as pairwise differences so that an argument shared by both
    lists cancels exactly (the free case relies on this)."""
    for d in dens:
        if _is_pole(d):
            return 0.0 + 0.0j
    for n in nums:
        if _is_pole(n):
            raise PoleError(f"gamma pole in connection coefficient at {n}")
    acc = 0.0 + 0.0j
    for n, d in zip(nums, dens):
        acc += _kernels.lgamma_c(n) - _kernels.lgamma_c(d)
    for n in nums[len(dens):]:
        acc += _kernels.lgamma_c(n)
    for d in dens[len(nums):]:
        acc -= _kernels.lgamma_c(d)
    return cmath.exp(acc)


def _abs_sq_ratio(nums: Sequence[complex], dens: Sequence[complex]) -> float:
    """|prod Gamma(nums) / prod Gamma(dens)|^2 without forming the values.
    Pairwise accumulation, as in _gamma_combo."""
    for d in dens:
        if _is_pole(d):
            return 0.0
    for n in nums:
        if _is_pole(n):
            raise PoleError(f"gamma pole in magnitude ratio at {n}")
    acc = 0.0
    for n, d in zip(nums, dens):
        acc += _kernels.lgamma_c(n).real - _kernels.lgamma_c(d).real
    for n in nums[len(dens):]:
        acc += _kernels.lgamma_c(n).real
    for d in dens[len(nums):]:
        acc -= _kernels.lgamma_c(d).real
    return math.exp(2.0 * acc)


def connection_coefficients(k: KinematicParams) -> ConnectionCoefficients:
    """Matching coefficients of the incident-side expansion onto the
    transmitted solution.  B and D obey B = A b1/c1 and D = C a2/c2."""
    hp = hypergeometric_parameters(k)
    a_nums, a_dens, c_nums, c_dens = _coefficient_args(hp)
    A = _gamma_combo(a_nums, a_dens)
    C = _gamma_combo(c_nums, c_dens)
    B = _gamma_combo((1.0 - hp.b1 + hp.a1, -hp.c1),
                     (1.0 - hp.c1 + hp.a1, -hp.b1))
    D = _gamma_combo((1.0 - hp.a2 + hp.b2, -hp.c2),
                     (1.0 - hp.c2 + hp.b2, -hp.a2))
    return ConnectionCoefficients(A, B, C, D)


def scattering_coefficients(pot: Potential, particle: Particle,
                            energy: float) -> ScatteringResult:
    """Reflection and transmission coefficients at the given energy.

    R = |C/A|^2 and T = (mu/nu)/|A|^2, evaluated entirely in the log domain.
    In the one-evanescent-channel bands the result is exact: R = 1, T = 0
    (for an imaginary nu this follows from the x -> -x mirror, which swaps the
    channel roles).  Energies inside the boundary guard are rejected."""
    region = classify_region(pot, particle, energy)
    if region is Region.BOUNDARY:
        raise BoundaryEnergyError(
            f"E={energy} within {boundary_eps()} of a channel threshold "
            "(or in the fully evanescent gap)")
    if region in (Region.II, Region.IV):
        return ScatteringResult(energy, region, 1.0, 0.0, 0.0)
    k = kinematics(pot, particle, energy)
    hp = hypergeometric_parameters(k)
    a_nums, a_dens, c_nums, c_dens = _coefficient_args(hp)
    refl = _abs_sq_ratio(c_nums + a_dens, c_dens + a_nums)
    inv_a_sq = _abs_sq_ratio(a_dens, a_nums)
    trans = (k.mu.real / k.nu.real) * inv_a_sq
    return ScatteringResult(energy, region, refl, trans, refl + trans - 1.0)


def currents(pot: Potential, particle: Particle, energy: float) -> Currents:
    """Conserved-current fluxes of the three asymptotic waves:
    j_inc = 6|A|^2 b nu / m, j_ref = -6|C|^2 b nu / m, j_trans = 6 b mu / m
    (zero when the transmitted channel is evanescent).  Requires a
    propagating incident channel."""
    region = classify_region(pot, particle, energy)
    if region is Region.BOUNDARY:
        raise BoundaryEnergyError(f"E={energy} on a channel threshold band")
    k = kinematics(pot, particle, energy)
    if k.nu.imag != 0.0:
        raise EvanescentIncidentError(
            f"incident channel evanescent at E={energy}")
    hp = hypergeometric_parameters(k)
    a_nums, a_dens, c_nums, c_dens = _coefficient_args(hp)
    b_over_m = pot.b / particle.m
    j_inc = 6.0 * _abs_sq_ratio(a_nums, a_dens) * b_over_m * k.nu.real
    j_ref = -6.0 * _abs_sq_ratio(c_nums, c_dens) * b_over_m * k.nu.real
    j_trans = 6.0 * b_over_m * k.mu.real if k.mu.imag == 0.0 else 0.0
    return Currents(j_inc, j_ref, j_trans)


def step_rt(a: float, m: float, energy: float) -> StepRT:
    """Sharp-step (b -> infinity) closed form.

    k_incident = sign(E+a) sqrt((E+a)^2 - m^2), likewise k_transmitted with
    E-a; R = ((k_i - k_t)/(k_i + k_t))^2, T = 1 - R.  Raises ChannelClosed
    when either channel is evanescent or exactly at threshold."""
    for name, val in (("a", a), ("m", m), ("energy", energy)):
        if not math.isfinite(val):
            raise InvalidParameterError(f"{name} must be finite")
    if m <= 0:
        raise InvalidParameterError(f"mass must be positive, got {m}")
    disc_i = (energy + a) ** 2 - m * m
    disc_t = (energy - a) ** 2 - m * m
    if disc_i <= 0 or disc_t <= 0:
        raise ChannelClosedError(
            f"sharp-step channels not both open at E={energy}")
    k_i = math.copysign(math.sqrt(disc_i), energy + a)
    k_t = math.copysign(math.sqrt(disc_t), energy - a)
    refl = ((k_i - k_t) / (k_i + k_t)) ** 2
    return StepRT(k_i, k_t, refl, 1.0 - refl)
