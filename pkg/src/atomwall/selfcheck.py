"""Self-check suite: every closed form is re-derived through an independent
numerical route and compared at a stated tolerance.

The oracle building blocks here (regulated principal-value evaluations of the
underlying frequency integrals, the contour-identity route, the Bernoulli
partial sums) are deliberately redundant with the closed forms in `vacuum`
and `thermal`: agreement of the two routes is the correctness evidence.
`atomwall check` runs `run_all` and reports one line per check.

`h0_scale` is a test hook: scaling the vacuum kernel by 1.01 must make the
retarded-limit check fail, which pins the suite's sensitivity.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import thermal, vacuum
from ._backend import kernels
from .quadrature import QuadratureSpec, abel_extrapolate, apm_identity, pv_integrate
from .specfun import H0, H0rr, geom_G_array

__all__ = [
    "CheckResult",
    "run_all",
    "vg_from_quadrature",
    "v0rr_from_quadrature",
    "v0fr_from_quadrature",
    "apm_direct",
    "apm_via_identity",
    "bernoulli_integral_numeric",
    "POLY_FAMILY",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


# ---------------------------------------------------------------------------
# oracle building blocks
# ---------------------------------------------------------------------------

def _polyval(coeffs, k):
    """Evaluate sum coeffs[j] k^j on a (possibly complex) array."""
    r = np.zeros_like(np.asarray(k), dtype=complex)
    for c in coeffs[::-1]:
        r = r * k + c
    return r


# test family for the dual-path contour check: f = 1, k, k^2, k^3 and the
# cubic-kernel instance k^3 * (wall factor written as an entire function),
# which at 2z = 1 is k^2 + 2ik - 2.
POLY_FAMILY: dict[str, tuple[complex, ...]] = {
    "1": (1.0,),
    "k": (0.0, 1.0),
    "k^2": (0.0, 0.0, 1.0),
    "k^3": (0.0, 0.0, 0.0, 1.0),
    "k^3*Gker": (-2.0, 2.0j, 1.0),
}


def _abel_ladder(x0: float) -> tuple[float, int]:
    return 0.25 * min(x0, 2.0), 7


@lru_cache(maxsize=None)
def vg_from_quadrature(x0: float) -> float:
    """Ground-state vacuum potential from its frequency integral
    (1/pi) int u^3 G(x0 u)/(1+u) du: the pole-free non-resonant combination,
    Abel-regulated and extrapolated."""
    from .quadrature import adaptive_semi_infinite

    eps0, n = _abel_ladder(x0)

    def integral(eps: float) -> float:
        spec = QuadratureSpec(
            rel_tol=3e-12, abs_tol=1e-16, max_subdivisions=200000,
            regulator=("exponential", eps), oscillation_scale=max(x0, 0.3),
            cutoff_efolds=50.0,
        )
        f = lambda u: u**3 * geom_G_array(x0 * u) / (1.0 + u) * np.exp(-eps * u)
        return adaptive_semi_infinite(f, spec).value

    est, _ = abel_extrapolate(integral, eps0, n=n)
    return est / math.pi


@lru_cache(maxsize=None)
def _vpart_from_quadrature(x0: float, power: int) -> float:
    """PV int u^power G(x0 u)/(1 - u^2) du with Abel regulator, extrapolated."""
    eps0, n = _abel_ladder(x0)

    def integral(eps: float) -> float:
        spec = QuadratureSpec(
            rel_tol=3e-12, abs_tol=1e-16, max_subdivisions=200000,
            pole=1.0, pv_window=0.5,
            regulator=("exponential", eps), oscillation_scale=max(x0, 0.3),
            cutoff_efolds=50.0,
        )
        residue = -0.5 * float(geom_G_array(np.array([x0]))[0]) * math.exp(-eps)
        f = lambda u: u**power * geom_G_array(x0 * u) / (1.0 - u * u) * np.exp(-eps * u)
        return pv_integrate(f, spec, residue=residue).value

    est, _ = abel_extrapolate(integral, eps0, n=n)
    return est


def v0rr_from_quadrature(x0: float) -> float:
    """Radiation-reaction part from its (resonant-pole) frequency integral."""
    return -_vpart_from_quadrature(x0, 4) / math.pi


def v0fr_from_quadrature(x0: float) -> float:
    """Vacuum fluctuation part from its frequency integral."""
    return _vpart_from_quadrature(x0, 3) / math.pi


def apm_via_identity(coeffs, lam: complex, k0: float, sign: str,
                     cutoff_efolds: float = 55.0) -> complex:
    """Contour-identity route for the half-line oscillatory integral.

    cutoff_efolds must absorb the polynomial growth of f along the rotated
    ray (t^d e^{-t} needs roughly 45 + d ln(cutoff) e-folds)."""
    return apm_identity(lambda k: _polyval(coeffs, k), lam, k0, sign,
                        QuadratureSpec(rel_tol=1e-12, abs_tol=1e-16,
                                       cutoff_efolds=cutoff_efolds))


def apm_direct(coeffs, lam: float, k0: float, sign: str, eps: float | None = None) -> complex:
    """Direct route: principal-value evaluation on the real axis of
    int_0^inf f(k) [1/(k+k0) -+ 1/(k-k0)] e^{ik lam} e^{-eps k} dk.

    With a fixed regulator eps the integral converges absolutely and the
    matching identity value is the one at complex phase lam + i eps.  With
    eps=None the regulator is removed by Richardson extrapolation, giving the
    genuinely oscillatory real-lam object (slower, used on spot checks)."""
    plus = sign in ("plus", "+")
    pm = -1.0 if plus else 1.0

    def integral(e: float) -> complex:
        spec = QuadratureSpec(
            rel_tol=2e-12, abs_tol=1e-16, max_subdivisions=120000,
            pole=k0, pv_window=min(k0 / 2.0, 1.0),
            regulator=("exponential", e), oscillation_scale=lam,
            cutoff_efolds=60.0,
        )

        def f(k):
            osc = _polyval(coeffs, k) * np.exp(1j * k * lam - e * k)
            return osc * (1.0 / (k + k0) + pm / (k - k0))

        res0 = complex(_polyval(coeffs, np.array([k0 + 0j]))[0]) * np.exp(1j * k0 * lam - e * k0)
        return pv_integrate(f, spec, residue=pm * res0).value

    if eps is not None:
        return integral(eps)
    est, _ = abel_extrapolate(integral, 0.2 * min(lam, 2.0 / k0), n=7)
    return est


def bernoulli_integral_numeric(n: int, x0: float) -> float:
    """I_n = PV int_0^inf x^{2n+2} G(x) x0^2/(x0^2 - x^2) dx via the contour
    identity (f_n(x) = x^{2n+1} + 2i x^{2n} - 2 x^{2n-1}, phase scale 1)."""
    coeffs = [0.0] * (2 * n + 2)
    coeffs[2 * n + 1] = 1.0
    coeffs[2 * n] = 2.0j
    coeffs[2 * n - 1] = -2.0
    a_plus = apm_via_identity(tuple(coeffs), 1.0, x0, "plus", cutoff_efolds=140.0)
    return (x0 / 2.0) * a_plus.imag


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------

def check_lvdw_limit(h0_scale: float = 1.0) -> tuple[bool, str]:
    x0 = 1e-3
    ratio = h0_scale * vacuum.vacuum_potentials(x0).vg / vacuum.asymptotic_lvdw(x0)
    err = abs(ratio - 1.0)
    return err < 0.01, f"|vg/(-1/x0^3) - 1| = {err:.2e} at x0=1e-3 (tol 1e-2)"


def check_cp_limit(h0_scale: float = 1.0) -> tuple[bool, str]:
    x0 = 1e3
    ratio = h0_scale * vacuum.vacuum_potentials(x0).vg / vacuum.asymptotic_cp(x0)
    err = abs(ratio - 1.0)
    return err < 0.002, f"|vg/(-6/pi x0^4) - 1| = {err:.2e} at x0=1e3 (tol 2e-3)"


def check_structure_identity() -> tuple[bool, str]:
    rng = np.random.default_rng(20211219)
    x = 10.0 ** rng.uniform(-3, 3, size=2000)
    worst = 0.0
    for x0 in x:
        r = vacuum.vacuum_potentials(float(x0))
        scale = max(abs(r.vg), abs(r.ve), abs(2 * r.v0rr), 1e-300)
        worst = max(worst, abs((r.vg + r.ve) - 2.0 * r.v0rr) / scale)
    return worst < 1e-13, f"max |vg+ve-2v0rr|/scale = {worst:.2e} on 2000 points (tol 1e-13)"


def check_resonance_extrema() -> tuple[bool, str]:
    tol = 2.0 * math.pi / 40.0
    worst = 0.0
    for n in range(5, 9):
        worst = max(worst, abs(vacuum.resonance_extremum(n, "max") - 2 * math.pi * n))
        worst = max(worst, abs(vacuum.resonance_extremum(n, "min") - 2 * math.pi * (n - 0.5)))
    return worst < tol, f"max |extremum - standing-wave position| = {worst:.3f} (tol {tol:.3f})"


def check_emission_rate() -> tuple[bool, str]:
    e1 = abs(vacuum.spontaneous_rate_ratio(1e-4) - 2.0 / 3.0)
    e2 = abs(vacuum.spontaneous_rate_ratio(1e3) - 1.0)
    return (e1 < 1e-6 and e2 < 1e-2), f"contact 2/3 err {e1:.1e} (tol 1e-6); far 1 err {e2:.1e} (tol 1e-2)"


def check_quadrature_basics() -> tuple[bool, str]:
    from .quadrature import adaptive_semi_infinite

    msgs = []
    ok = True
    spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-14, regulator=("exponential", 1.0))
    e1 = abs(adaptive_semi_infinite(lambda k: np.exp(-k), spec).value - 1.0)
    ok &= e1 < 1e-12
    msgs.append(f"exp {e1:.1e}")
    spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-13, regulator=("bose", 1.0), cutoff_efolds=60.0)
    e2 = abs(adaptive_semi_infinite(lambda k: k**3 / np.expm1(k), spec).value - math.pi**4 / 15.0)
    ok &= e2 < 1e-10
    msgs.append(f"bose {e2:.1e}")

    def sinx_over_x(eps):
        s = QuadratureSpec(rel_tol=1e-13, abs_tol=1e-16, regulator=("exponential", eps),
                           oscillation_scale=1.0, cutoff_efolds=50.0)
        return adaptive_semi_infinite(lambda k: np.sin(k) / np.maximum(k, 1e-300) * np.exp(-eps * k), s).value

    est, _ = abel_extrapolate(sinx_over_x, 0.25, n=6)
    e3 = abs(est - math.pi / 2.0)
    ok &= e3 < 1e-6
    msgs.append(f"sinx/x {e3:.1e}")
    # symmetric-window principal value of a bare pole is exactly zero
    spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-13, pole=1.0, pv_window=1.0)
    e4 = abs(pv_integrate(lambda k: 2.5 / (k - 1.0), spec, residue=2.5, upper=2.0).value)
    ok &= e4 < 1e-13
    msgs.append(f"pv-zero {e4:.1e}")
    # fixed-regulator PV of sin(k)/(k-2) against the contour identity
    eps = 0.1
    spec = QuadratureSpec(rel_tol=1e-13, abs_tol=1e-16, pole=2.0, pv_window=1.0,
                          regulator=("exponential", eps), oscillation_scale=1.0, cutoff_efolds=55.0)
    res = pv_integrate(lambda k: np.sin(k) * np.exp(-eps * k) / (k - 2.0), spec,
                       residue=math.sin(2.0) * math.exp(-2 * eps)).value
    ident = apm_via_identity((1.0,), 1.0 + 1j * eps, 2.0, "minus") - apm_via_identity((1.0,), 1.0 + 1j * eps, 2.0, "plus")
    e5 = abs(res - (0.5 * ident).imag)
    ok &= e5 < 1e-8
    msgs.append(f"pv-vs-identity {e5:.1e}")
    return ok, "; ".join(msgs)


def check_vacuum_oracle() -> tuple[bool, str]:
    worst = 0.0
    for x0 in (0.3, 1.0, 3.0, 10.0, 30.0):
        r = vacuum.vacuum_potentials(x0)
        worst = max(worst, abs(vg_from_quadrature(x0) - r.vg) / abs(r.vg))
        worst = max(worst, abs(v0rr_from_quadrature(x0) - r.v0rr) / abs(r.v0rr))
        worst = max(worst, abs(v0fr_from_quadrature(x0) - r.v0fr) / abs(r.v0fr))
    return worst < 1e-6, f"max rel err of regulated-integral route = {worst:.2e} (tol 1e-6)"


def check_kernel_reps() -> tuple[bool, str]:
    worst = 0.0
    for x0 in (0.3, 1.0, 3.0, 10.0, 30.0):
        h0q = math.pi * x0**3 * vg_from_quadrature(x0)
        hrq = math.pi * x0**3 * v0rr_from_quadrature(x0)
        worst = max(worst, abs(h0q - H0(x0)) / abs(H0(x0)))
        worst = max(worst, abs(hrq - H0rr(x0)) / abs(H0rr(x0)))
    return worst < 1e-8, f"max rel err of kernel integral reps = {worst:.2e} (tol 1e-8)"


def check_dual_path(full_grid: bool = True) -> tuple[bool, str]:
    """Identity route vs direct PV route.

    The whole family x grid is compared at fixed regulator eps = 0.05 (both
    routes absolutely convergent; the identity is evaluated at the matching
    complex phase lam + i eps).  The regulator-free real-lam objects are then
    compared on spot checks through the Richardson ladder."""
    pairs = [(lam, k0) for lam in (0.5, 1.0, 5.0) for k0 in (0.5, 2.0)] if full_grid \
        else [(1.0, 0.5), (0.5, 2.0)]
    eps = 0.05
    worst = 0.0
    for _, coeffs in POLY_FAMILY.items():
        for lam, k0 in pairs:
            for sign in ("plus", "minus"):
                a = apm_via_identity(coeffs, complex(lam, eps), k0, sign)
                d = apm_direct(coeffs, lam, k0, sign, eps=eps)
                worst = max(worst, abs(a - d) / max(abs(a), 1e-30))
    worst_x = 0.0
    for coeffs in (POLY_FAMILY["k^3"], POLY_FAMILY["k^3*Gker"]):
        for lam, k0, sign in ((1.0, 0.5, "plus"), (0.5, 2.0, "minus")):
            a = apm_via_identity(coeffs, lam, k0, sign)
            d = apm_direct(coeffs, lam, k0, sign)
            worst_x = max(worst_x, abs(a - d) / max(abs(a), 1e-30))
    ok = worst < 1e-7 and worst_x < 1e-7
    return ok, (f"fixed-regulator grid: {worst:.2e}; regulator-free spot checks: "
                f"{worst_x:.2e} (tol 1e-7)")


def check_bernoulli_coth() -> tuple[bool, str]:
    x0, theta = 2.0, 2.0  # k0 lambda_T = 1
    integrals = [bernoulli_integral_numeric(n, x0) for n in range(1, 7)]
    partial = thermal.bernoulli_delta3_partial_sum(x0, theta, 6, integrals=integrals)
    closed = thermal.delta_T_terms(x0, theta)[2]
    err = abs(partial - closed) / abs(closed)
    return err < 1e-6, f"6-term Bernoulli sum vs coth closed form: rel {err:.2e} (tol 1e-6)"


def check_lifshitz_claim() -> tuple[bool, str]:
    theta = 0.04  # k0 lambda_T = 50
    worst = 0.0
    for zfrac in (1.0, 2.0, 3.0, 5.0):
        x0 = zfrac * 4.0 / theta
        total = vacuum.vacuum_potentials(x0).vg + thermal.v_T_quadrature(x0, theta, rel_tol=1e-10)
        worst = max(worst, abs(total / thermal.lifshitz(x0, theta) - 1.0))
    return worst < 1e-3, f"max |(vg+v_T)/lifshitz - 1| = {worst:.2e} for z in [lamT,5lamT] (tol 1e-3)"


def check_smallz_claim() -> tuple[bool, str]:
    theta = 0.04
    x0 = 0.2 / theta  # z = 0.05 lambda_T
    q = thermal.v_T_quadrature(x0, theta, rel_tol=1e-10)
    err = abs(q / thermal.v_T_smallz(x0, theta) - 1.0)
    return err < 0.03, f"|v_T/smallz - 1| = {err:.2e} at z = 0.05 lamT (tol 3e-2)"


def check_closed_form_validity() -> tuple[bool, str]:
    worst = 0.0
    for theta in (0.2, 0.5, 1.0, 2.0):
        for mult in (1.0, 2.0):
            x0 = mult * 4.0 / theta
            total = vacuum.vacuum_potentials(x0).vg + thermal.v_T_quadrature(x0, theta, rel_tol=1e-10)
            worst = max(worst, abs(total / thermal.v_closed(x0, theta) - 1.0))
    return worst < 0.01, f"max |quad total/closed - 1| = {worst:.2e} for z >= lamT (tol 1e-2)"


def check_average_consistency() -> tuple[bool, str]:
    worst = 0.0
    for theta in (0.1, 0.4, 1.0, 3.0, 10.0):
        for x0 in (1.0, 10.0, 100.0):
            a = thermal.v_average(x0, theta)
            b = thermal.v_average_assembled(x0, theta)
            worst = max(worst, abs(a - b) / abs(a))
    return worst < 1e-10, f"max |closed - assembled|/|closed| = {worst:.2e} (tol 1e-10)"


def check_average_error_values() -> tuple[bool, str]:
    e04 = 1.0 - math.tanh(1.0 / 0.4)
    e10 = 1.0 - math.tanh(1.0)
    ok = abs(e04 - 0.0134) < 5e-4 and abs(e10 - 0.238) < 5e-3
    return ok, f"1-tanh(1/theta): {e04:.4f} at 0.4 (expect 0.0134+-5e-4), {e10:.4f} at 1.0 (expect 0.238+-5e-3)"


def check_high_t_saturation() -> tuple[bool, str]:
    ok = True
    worst = 0.0
    for theta in (10.0, 20.0):
        residual = 1.0 + thermal.v_average(2.0, theta) * 8.0
        series = 1.0 / (3 * theta**2) - 2.0 / (15 * theta**4)
        worst = max(worst, abs(residual - series))
    ok &= worst < 1e-6
    sat = abs(thermal.v_average(2.0, 100.0) * 8.0 + 1.0)
    ok &= sat < 4e-5
    return ok, f"two-term residual err {worst:.2e} (tol 1e-6, theta>=10); theta=100 saturation {sat:.2e} (tol 4e-5)"


def check_lifshitz_recovery() -> tuple[bool, str]:
    theta, x0 = 0.25, 20.0
    w = math.exp(-2.0 / theta)
    expected = thermal.lifshitz(x0, theta) * (1.0 - 2.0 * w + 2.0 * w * w)
    err = abs(thermal.v_average(x0, theta) - expected) / abs(expected)
    return err < 1e-10, f"low-theta expansion of average: rel {err:.2e} at theta=0.25 (tol 1e-10)"


def check_bose_small_y() -> tuple[bool, str]:
    y = 1e-6
    exact = thermal.bose_occupation(y)
    series = 1.0 / y - 0.5 + y / 12.0
    err = abs(exact - series) / abs(series)
    return err < 1e-9, f"Laurent expansion at y=1e-6: rel {err:.2e} (tol 1e-9)"


_CHECKS: list[tuple[str, Callable[..., tuple[bool, str]]]] = [
    ("london-limit", check_lvdw_limit),
    ("casimir-polder-limit", check_cp_limit),
    ("structure-identity", check_structure_identity),
    ("resonance-extrema", check_resonance_extrema),
    ("emission-rate", check_emission_rate),
    ("quadrature-basics", check_quadrature_basics),
    ("vacuum-oracle", check_vacuum_oracle),
    ("kernel-integral-reps", check_kernel_reps),
    ("dual-path-identity", check_dual_path),
    ("bernoulli-vs-coth", check_bernoulli_coth),
    ("lifshitz-claim", check_lifshitz_claim),
    ("small-z-claim", check_smallz_claim),
    ("closed-form-validity", check_closed_form_validity),
    ("average-consistency", check_average_consistency),
    ("average-error-values", check_average_error_values),
    ("high-T-saturation", check_high_t_saturation),
    ("lifshitz-recovery", check_lifshitz_recovery),
    ("bose-small-y", check_bose_small_y),
]


def run_all(h0_scale: float = 1.0) -> list[CheckResult]:
    """Run the whole suite.  h0_scale != 1 perturbs the vacuum kernel in the
    asymptotic-limit checks (sensitivity hook)."""
    out = []
    for name, fn in _CHECKS:
        t0 = time.perf_counter()
        try:
            if fn in (check_lvdw_limit, check_cp_limit):
                passed, detail = fn(h0_scale)
            else:
                passed, detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        out.append(CheckResult(name, passed, detail, time.perf_counter() - t0))
    return out
