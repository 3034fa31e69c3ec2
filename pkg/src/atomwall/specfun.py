"""Special functions underlying the closed-form potentials.

si, Ci and the auxiliary pair aux_F (= Ci sin - si cos) and aux_Gcal
(= d aux_F/dx = Ci cos + si sin), the geometric wall factor geom_G, and the
two vacuum kernels H0 and H0rr.

Naming note: two distinct functions in this problem are conventionally both
called "G": the geometric factor geom_G (sin x/x + 2 cos x/x^2 - 2 sin x/x^3)
and the derivative aux_Gcal of aux_F.  They are unrelated; keep the long
names.

Evaluation is delegated to the kernel backend (compiled if available);
`EvalPolicy` controls the series/continued-fraction crossover and the
requested accuracy.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import BACKEND_NAME, kernels

__all__ = [
    "EvalPolicy",
    "DEFAULT_POLICY",
    "BACKEND_NAME",
    "si",
    "Ci",
    "aux_F",
    "aux_Gcal",
    "geom_G",
    "geom_G_array",
    "H0",
    "H0rr",
]


@dataclass(frozen=True)
class EvalPolicy:
    """small_x_crossover: power series below, auxiliary-function branches above.
    target_rel_err: requested relative accuracy of the special functions."""

    small_x_crossover: float = 4.0
    target_rel_err: float = 1e-12

    def __post_init__(self):
        if not (self.small_x_crossover > 0):
            raise ValueError("small_x_crossover must be > 0")
        if not (0 < self.target_rel_err < 1e-6):
            raise ValueError("target_rel_err must be in (0, 1e-6)")


DEFAULT_POLICY = EvalPolicy()


def si(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """si(x) = -pi/2 + int_0^x sin t/t dt  (x >= 0)."""
    return kernels.si(x, policy.small_x_crossover, policy.target_rel_err)


def Ci(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt  (x > 0)."""
    return kernels.ci(x, policy.small_x_crossover, policy.target_rel_err)


def aux_F(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """aux_F(x) = Ci(x) sin x - si(x) cos x; aux_F(0) = pi/2, ~1/x - 2/x^3 at infinity."""
    return kernels.aux_f(x, policy.small_x_crossover, policy.target_rel_err)


def aux_Gcal(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """aux_Gcal(x) = d aux_F/dx = Ci(x) cos x + si(x) sin x; ~ln x + gamma at 0+."""
    return kernels.aux_g(x, policy.small_x_crossover, policy.target_rel_err)


def geom_G(x: float) -> float:
    """Geometric wall factor sin x/x + 2 cos x/x^2 - 2 sin x/x^3; geom_G(0) = 1/3."""
    return kernels.geom_g(x)


def geom_G_array(x: np.ndarray) -> np.ndarray:
    """Vectorized geom_G for quadrature integrands."""
    return kernels.geom_g_many(np.asarray(x, dtype=float))


def H0rr(x: float) -> float:
    """Radiation-reaction vacuum kernel -pi (cos x + x sin x - x^2 cos x/2)."""
    return kernels.h0rr(x)


def H0(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Full vacuum kernel (x^2-2) aux_F(x) + 2x aux_Gcal(x) - x  (x > 0).

    H0 -> -pi + x as x -> 0+ and H0 ~ -6/x + 40/x^3 at large x.
    """
    return kernels.h0(x, policy.small_x_crossover, policy.target_rel_err)
