"""Independent numerical check of the analytic reflection/transmission:
direct integration of the second-order field equation across the step with a
plane-wave decomposition at the walls."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _kernels
from .errors import (
    BoundaryEnergyError,
    ChannelClosedError,
    InvalidParameterError,
    NonConvergenceError,
)
from .scattering import Particle, Potential, Region, classify_region, kinematics

__all__ = ["IntegrationSettings", "NumericRT", "numeric_rt"]

# b * x_right must reach the flat tail: tanh >= 1 - 1e-12 needs b x >= 14.163
_DEFAULT_SPAN = 14.5
_FLATNESS = 1.0 - 1e-12


@dataclass(frozen=True)
class IntegrationSettings:
    """Adaptive-integrator controls.

    Tolerances must lie in (0, 1e-4]; the window edge x_right (defaulting to
    14.5/b) must satisfy tanh(b x_right) >= 1 - 1e-12 so the walls sit on the
    flat tails of the step.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-10
    max_steps: int = 1_000_000
    x_right: float | None = None

    def __post_init__(self) -> None:
        for name, tol in (("rel_tol", self.rel_tol), ("abs_tol", self.abs_tol)):
            if not (isinstance(tol, float) and 0.0 < tol <= 1e-4):
                raise InvalidParameterError(
                    f"{name} must lie in (0, 1e-4], got {tol}")
        if not (isinstance(self.max_steps, int) and self.max_steps > 0):
            raise InvalidParameterError("max_steps must be a positive integer")
        if self.x_right is not None and not (
                math.isfinite(self.x_right) and self.x_right > 0):
            raise InvalidParameterError("x_right must be positive and finite")

    def window(self, pot: Potential) -> tuple[float, float]:
        """(x_left, x_right) for this potential, flatness-checked."""
        xr = self.x_right if self.x_right is not None else _DEFAULT_SPAN / pot.b
        if math.tanh(pot.b * xr) < _FLATNESS:
            raise InvalidParameterError(
                f"x_right={xr} leaves tanh(b x_right) below {_FLATNESS}")
        return -xr, xr


@dataclass(frozen=True)
class NumericRT:
    R: float
    T: float
    unitarity_defect: float
    steps: int


def _integrate(pot: Potential, particle: Particle, energy: float,
               settings: IntegrationSettings,
               x_start: float, x_end: float,
               psi0: complex, dpsi0: complex) -> tuple[complex, complex, int]:
    """Propagate (psi, dpsi) from x_start to x_end; raises NonConvergence
    when the step budget runs out."""
    psi, dpsi, steps, status = _kernels.dp54_scatter(
        pot.a, pot.b, particle.m, energy, x_start, x_end, psi0, dpsi0,
        settings.rel_tol, settings.abs_tol, settings.max_steps)
    if status != 0:
        raise NonConvergenceError(
            f"integrator exhausted {settings.max_steps} steps at E={energy}")
    return psi, dpsi, steps


def numeric_rt(pot: Potential, particle: Particle, energy: float,
               settings: IntegrationSettings | None = None) -> NumericRT:
    """R and T by direct integration, independent of the gamma-function route.

    A pure transmitted plane wave is imposed at x_right and carried to
    x_left, where the field is split into incident and reflected plane waves.
    Requires both channels propagating (regions I, III, V); at the default
    tolerances the unitarity defect stays below 1e-7 (measured ~1e-10).
    """
    if settings is None:
        settings = IntegrationSettings()
    region = classify_region(pot, particle, energy)
    if region is Region.BOUNDARY:
        raise BoundaryEnergyError(f"E={energy} on a channel threshold band")
    if region in (Region.II, Region.IV):
        raise ChannelClosedError(
            f"plane-wave decomposition needs both channels open, region {region.token}")
    x_left, x_right = settings.window(pot)
    k = kinematics(pot, particle, energy)
    k_inc = 2.0 * pot.b * k.nu.real
    k_trans = 2.0 * pot.b * k.mu.real
    psi0 = cmath.exp(1j * k_trans * x_right)
    psi, dpsi, steps = _integrate(pot, particle, energy, settings,
                                  x_right, x_left, psi0, 1j * k_trans * psi0)
    half_sum = 0.5 * (psi + dpsi / (1j * k_inc))
    half_diff = 0.5 * (psi - dpsi / (1j * k_inc))
    amp_in = half_sum / cmath.exp(1j * k_inc * x_left)
    amp_ref = half_diff / cmath.exp(-1j * k_inc * x_left)
    refl = abs(amp_ref / amp_in) ** 2
    trans = (k_trans / k_inc) / abs(amp_in) ** 2
    return NumericRT(refl, trans, refl + trans - 1.0, steps)
