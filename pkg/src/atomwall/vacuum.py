"""Vacuum (T = 0) atom-wall potentials for the two-level atom.

All values are normalized by hbar*c*alpha0*k0^4 and depend only on
x0 = 2 k0 z:

    v0rr(x0) = H0rr(x0) / (pi x0^3)          radiation-reaction part
    v0fr(x0) = [H0(x0) - H0rr(x0)]/(pi x0^3) vacuum field-fluctuation part
    vg = v0rr + v0fr,   ve = v0rr - v0fr = 2 v0rr - vg

The ground state follows the non-resonant part of the polarizability, the
excited state the resonant part: at short distance both reduce to the London
form -1/x0^3, at large distance vg falls to the retarded -6/(pi x0^4) while
ve oscillates as cos(x0)/x0 with extrema pinned near the standing-wave
condition x0 = 2 pi n (z = n lambda0/2).

The excited state also decays: gamma_ratio = 1 - geom_G(x0) is the
spontaneous emission rate in units of its free-space value 2 c alpha0 k0^4.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core_types import PotentialBreakdown
from .specfun import DEFAULT_POLICY, EvalPolicy, H0, H0rr, geom_G

__all__ = [
    "VacuumResult",
    "v0rr",
    "v0fr",
    "vacuum_potentials",
    "vacuum_breakdown",
    "asymptotic_lvdw",
    "asymptotic_cp",
    "asymptotic_resonant",
    "spontaneous_rate_ratio",
    "ground_energy_rate",
    "resonance_extremum",
]


@dataclass(frozen=True)
class VacuumResult:
    """Normalized vacuum potentials at one distance, plus the emission ratio."""

    x0: float
    v0rr: float
    v0fr: float
    vg: float
    ve: float
    gamma_ratio: float


def _check_x0(x0: float) -> None:
    if not x0 > 0:
        raise ValueError(f"x0 must be > 0, got {x0}")


def v0rr(x0: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Radiation-reaction vacuum term H0rr(x0)/(pi x0^3); state independent."""
    _check_x0(x0)
    return H0rr(x0) / (math.pi * x0**3)


def v0fr(x0: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Vacuum field-fluctuation term [H0(x0) - H0rr(x0)]/(pi x0^3);
    enters the ground state with + and the excited state with -."""
    _check_x0(x0)
    return (H0(x0, policy) - H0rr(x0)) / (math.pi * x0**3)


def vacuum_potentials(x0: float, policy: EvalPolicy = DEFAULT_POLICY) -> VacuumResult:
    """Both vacuum potentials and their rr/fr split at one distance."""
    _check_x0(x0)
    rr = v0rr(x0, policy)
    fr = v0fr(x0, policy)
    return VacuumResult(
        x0=x0,
        v0rr=rr,
        v0fr=fr,
        vg=rr + fr,
        ve=rr - fr,
        gamma_ratio=spontaneous_rate_ratio(x0),
    )


def vacuum_breakdown(x0: float, state: str, policy: EvalPolicy = DEFAULT_POLICY) -> PotentialBreakdown:
    """PotentialBreakdown view of the vacuum result (thermal part = 0)."""
    r = vacuum_potentials(x0, policy)
    return PotentialBreakdown(v_rr=r.v0rr, v_fr_vac=r.v0fr, v_thermal=0.0, state=state)


def asymptotic_lvdw(x0: float) -> float:
    """Short-distance (London) form -1/x0^3, i.e. -hbar omega0 alpha0/(8 z^3)."""
    return -1.0 / x0**3


def asymptotic_cp(x0: float) -> float:
    """Large-distance retarded ground-state form -6/(pi x0^4),
    i.e. -3 hbar c alpha0/(8 pi z^4)."""
    return -6.0 / (math.pi * x0**4)


def asymptotic_resonant(x0: float) -> float:
    """Large-distance excited-state form +6/(pi x0^4) + cos(x0)/x0: the
    oscillating resonant tail dominating every power law."""
    return 6.0 / (math.pi * x0**4) + math.cos(x0) / x0


def spontaneous_rate_ratio(x0: float) -> float:
    """Gamma_spt(z)/Gamma_free = 1 - geom_G(x0): 2/3 at contact, 1 far away,
    and ~1 again at each potential extremum (geom_G has a node there)."""
    _check_x0(x0)
    return 1.0 - geom_G(x0)


def ground_energy_rate() -> float:
    """Net energy exchange rate of the ground state with the vacuum field.

    Identically zero: the ground state can neither emit spontaneously nor
    absorb from the vacuum.  Kept as an executable statement of that fact.
    """
    return 0.0


def resonance_extremum(
    n: int,
    kind: str = "max",
    x_tol: float = 4.0 * math.pi / 1000.0,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """Locate the n-th extremum of the excited-state potential ve(x0) by
    golden-section search.

    kind="max": bracket around the standing-wave condition x0 = 2 pi n;
    kind="min": around x0 = 2 pi (n - 1/2).  x_tol defaults to the x0
    equivalent of lambda0/1000 in z.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "max":
        center = 2.0 * math.pi * n
    elif kind == "min":
        center = 2.0 * math.pi * (n - 0.5)
    else:
        raise ValueError("kind must be 'max' or 'min'")
    lo = center - 0.5 * math.pi
    hi = center + 0.5 * math.pi

    def ve(x):
        return (2.0 * H0rr(x) - H0(x, policy)) / (math.pi * x**3)

    # golden-section: maximize ve for "max", minimize for "min"
    sgn = -1.0 if kind == "max" else 1.0
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc = sgn * ve(c)
    fd = sgn * ve(d)
    while (b - a) > x_tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = sgn * ve(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = sgn * ve(d)
    return 0.5 * (a + b)
