"""Dimensionless conventions, physical-input conversion and shared value types.

Internally everything is a function of two dimensionless numbers:

    x0    = 2 k0 z          (scaled atom-wall distance)
    theta = 2 kB T / (hbar omega0)   (normalized temperature, 0 = vacuum)

All potentials are expressed in units of hbar*c*alpha0*k0^4.  Physical units
(microns, Kelvin, eV) exist only in `from_physical` / `denormalize`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from .constants import ANGSTROM3, C_LIGHT, EV, HBAR, K_BOLTZMANN, MICRON

__all__ = [
    "AtomSpec",
    "ReducedPoint",
    "PotentialBreakdown",
    "SweepTable",
    "atom_from_physical",
    "from_physical",
    "thermal_wavelength",
    "denormalize",
]


@dataclass(frozen=True)
class AtomSpec:
    """Two-level atom: transition wavenumber k0 [1/m] and static polarizability
    alpha0 [m^3] (isotropic, Gaussian convention)."""

    k0: float
    alpha0: float

    def __post_init__(self):
        if not (self.k0 > 0):
            raise ValueError(f"k0 must be > 0, got {self.k0}")
        if not (self.alpha0 > 0):
            raise ValueError(f"alpha0 must be > 0, got {self.alpha0}")

    @property
    def omega0(self) -> float:
        """Transition angular frequency [rad/s]."""
        return C_LIGHT * self.k0

    @property
    def lambda0(self) -> float:
        """Transition wavelength [m]."""
        return 2.0 * math.pi / self.k0

    @property
    def energy_scale(self) -> float:
        """hbar*c*alpha0*k0^4, the unit of all normalized potentials [J]."""
        return HBAR * C_LIGHT * self.alpha0 * self.k0**4

    @property
    def gamma_free(self) -> float:
        """Free-space spontaneous emission rate 2*c*alpha0*k0^4 [1/s]."""
        return 2.0 * C_LIGHT * self.alpha0 * self.k0**4


@dataclass(frozen=True)
class ReducedPoint:
    """Dimensionless evaluation point.

    eta = lambda_T/(2z) is carried along for convenience; it is tied to the
    other two by eta*x0*theta = 2 whenever theta > 0.
    """

    x0: float
    theta: float = 0.0
    eta: float | None = None

    def __post_init__(self):
        if not (self.x0 > 0):
            raise ValueError(f"x0 must be > 0, got {self.x0}")
        if self.theta < 0:
            raise ValueError(f"theta must be >= 0, got {self.theta}")
        if self.theta > 0 and self.eta is None:
            object.__setattr__(self, "eta", 2.0 / (self.x0 * self.theta))
        if self.theta == 0 and self.eta is not None:
            raise ValueError("eta is only defined for theta > 0")

    @property
    def z_over_lambda_t(self) -> float:
        """z/lambda_T = x0*theta/4 (only meaningful for theta > 0)."""
        if self.theta <= 0:
            raise ValueError("z/lambda_T requires theta > 0")
        return self.x0 * self.theta / 4.0


State = Literal["ground", "excited", "thermal_average"]


@dataclass(frozen=True)
class PotentialBreakdown:
    """Normalized potential split into its radiation-reaction (rr),
    vacuum field-fluctuation (fr) and thermal field-fluctuation parts.

    Totals (units hbar*c*alpha0*k0^4):
        ground  = v_rr + v_fr_vac + v_thermal
        excited = v_rr - v_fr_vac - v_thermal
    so ground + excited = 2*v_rr identically.
    """

    v_rr: float
    v_fr_vac: float
    v_thermal: float
    state: State

    def __post_init__(self):
        if self.state not in ("ground", "excited", "thermal_average"):
            raise ValueError(f"unknown state tag {self.state!r}")

    @property
    def ground_total(self) -> float:
        return self.v_rr + self.v_fr_vac + self.v_thermal

    @property
    def excited_total(self) -> float:
        return self.v_rr - self.v_fr_vac - self.v_thermal

    def total(self, theta: float | None = None) -> float:
        """Value of the tagged state.  The thermal average weights the
        fluctuation parts by the ground/excited population difference
        tanh(1/theta), so it needs theta."""
        if self.state == "ground":
            return self.ground_total
        if self.state == "excited":
            return self.excited_total
        if theta is None or theta <= 0:
            raise ValueError("thermal_average total requires theta > 0")
        return self.v_rr + math.tanh(1.0 / theta) * (self.v_fr_vac + self.v_thermal)


@dataclass(frozen=True)
class SweepTable:
    """Ordered table of sweep results destined for CSV/JSON emission.

    The first column is the sweep abscissa and must be strictly increasing.
    `comments` carry the normalization convention and the formulas used.
    """

    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    units_note: str = "potentials in units of hbar*c*alpha0*k0^4"
    comments: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        ncol = len(self.columns)
        if ncol == 0:
            raise ValueError("need at least one column")
        for i, row in enumerate(self.rows):
            if len(row) != ncol:
                raise ValueError(f"row {i} has {len(row)} fields, expected {ncol}")
        key = [row[0] for row in self.rows]
        for i in range(1, len(key)):
            if not key[i] > key[i - 1]:
                raise ValueError(
                    f"rows must be strictly ordered by {self.columns[0]}: "
                    f"row {i} has {key[i]!r} after {key[i - 1]!r}"
                )

    def __len__(self) -> int:
        return len(self.rows)


def thermal_wavelength(T_K: float) -> float:
    """lambda_T = hbar*c/(kB*T) [m]; the scale beyond which thermal photons
    dominate the dispersion interaction."""
    if not (T_K > 0):
        raise ValueError(f"temperature must be > 0, got {T_K}")
    return HBAR * C_LIGHT / (K_BOLTZMANN * T_K)


def atom_from_physical(lambda0_um: float, alpha0_A3: float) -> AtomSpec:
    """AtomSpec from a transition wavelength [um] and a static polarizability
    [Angstrom^3]."""
    if not (lambda0_um > 0):
        raise ValueError(f"lambda0_um must be > 0, got {lambda0_um}")
    if not (alpha0_A3 > 0):
        raise ValueError(f"alpha0_A3 must be > 0, got {alpha0_A3}")
    k0 = 2.0 * math.pi / (lambda0_um * MICRON)
    return AtomSpec(k0=k0, alpha0=alpha0_A3 * ANGSTROM3)


def from_physical(
    lambda0_um: float, alpha0_A3: float, z_um: float, T_K: float = 0.0
) -> tuple[AtomSpec, ReducedPoint]:
    """Convert physical inputs to the dimensionless evaluation point.

    x0 = 4*pi*z/lambda0 and theta = 2*kB*T/(hbar*omega0); T_K = 0 selects the
    vacuum state.
    """
    atom = atom_from_physical(lambda0_um, alpha0_A3)
    if not (z_um > 0):
        raise ValueError(f"z_um must be > 0, got {z_um}")
    if T_K < 0:
        raise ValueError(f"T_K must be >= 0, got {T_K}")
    x0 = 2.0 * atom.k0 * z_um * MICRON
    theta = 0.0
    if T_K > 0:
        theta = 2.0 * K_BOLTZMANN * T_K / (HBAR * atom.omega0)
    return atom, ReducedPoint(x0=x0, theta=theta)


def denormalize(v_norm: float, atom: AtomSpec, unit: str = "J") -> float:
    """Convert a normalized potential (units hbar*c*alpha0*k0^4) to energy."""
    e = v_norm * atom.energy_scale
    if unit == "J":
        return e
    if unit == "eV":
        return e / EV
    raise ValueError(f"unknown unit {unit!r} (use 'J' or 'eV')")
