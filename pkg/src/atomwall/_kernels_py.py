"""Pure-Python twin of the compiled kernel extension.

Scalar kernels use only `math`/`cmath`; the array kernels used inside
quadrature integrands are vectorized with numpy.  The compiled module
`_kernels_cy` implements exactly the same functions with the same branch
structure; `atomwall._backend` picks one of the two at import time.

Evaluation scheme for the sine/cosine-integral family:

  * x < crossover            power series for Si(x) and Cin(x)
  * crossover <= x < 40      auxiliary functions f, g from the continued
                             fraction of exp(ix) E1(ix) (modified Lentz)
  * x >= 40                  divergent asymptotic series for f, g truncated
                             at its smallest term (error < 1e-13 there)

with   si = -f cos - g sin,  Ci = f sin - g cos,
       aux_f = f (= Ci sin - si cos),  aux_g = -g (= d aux_f/dx).
"""
from __future__ import annotations

import cmath
import math

import numpy as np

EULER_GAMMA = 0.577215664901532860606512090082
PI = math.pi
HALF_PI = math.pi / 2.0

# branch boundaries shared by both backends
ASYMPTOTIC_X = 40.0     # f,g switch from continued fraction to asymptotic series
H0_SERIES_X = 0.2       # small-x logarithmic series for the vacuum kernel
H0_ASYMPT_X = 50.0      # large-x inverse-power series for the vacuum kernel
GEOM_SERIES_X = 0.5     # Taylor branch of the geometric factor


def sici_series(x: float, eps: float = 1e-16) -> tuple[float, float]:
    """(Si(x), Cin(x)) by power series; intended for 0 <= x <~ 8."""
    x2 = x * x
    si = 0.0
    t = x
    n = 0
    while True:
        si += t / (2 * n + 1)
        n += 1
        t *= -x2 / ((2 * n) * (2 * n + 1))
        if abs(t) <= eps * (abs(si) + 1e-300) or n > 120:
            break
    cin = 0.0
    t = x2 / 2.0
    n = 1
    while True:
        cin += t / (2 * n)
        n += 1
        t *= -x2 / ((2 * n - 1) * (2 * n))
        if abs(t) <= eps * (abs(cin) + 1e-300) or n > 120:
            break
    return si, cin


def aux_fg_cf(x: float, eps: float = 1e-16, max_iter: int = 300) -> tuple[float, float]:
    """(f(x), g(x)) from g - i f = exp(ix) E1(ix), E1 by modified Lentz CF.

    The continued fraction E1(z) = e^{-z}/(z+1- 1/(z+3- 4/(z+5- 9/(...))))
    converges on the imaginary axis for x >~ 2."""
    z = complex(0.0, x)
    tiny = 1e-300
    fcf = z + 1.0
    if fcf == 0:
        fcf = tiny
    c = fcf
    d = 0.0 + 0.0j
    for n in range(1, max_iter):
        a = -float(n * n)
        b = z + (2 * n + 1)
        d = b + a * d
        if d == 0:
            d = tiny
        c = b + a / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        fcf *= delta
        if abs(delta - 1.0) < eps:
            break
    w = 1.0 / fcf  # = exp(ix) E1(ix)
    return -w.imag, w.real


def aux_fg_asymptotic(x: float) -> tuple[float, float]:
    """(f(x), g(x)) from the asymptotic series, truncated at the smallest term.

    f ~ 1/x (1 - 2!/x^2 + 4!/x^4 - ...),  g ~ 1/x^2 (1 - 3!/x^2 + 5!/x^4 - ...)
    """
    x2 = x * x
    f = 0.0
    t = 1.0
    n = 0
    while True:
        f += t
        n += 1
        tn = -t * (2 * n - 1) * (2 * n) / x2
        if abs(tn) >= abs(t) or n > 60:
            break
        t = tn
        if abs(t) < 1e-18:
            break
    g = 0.0
    t = 1.0
    n = 0
    while True:
        g += t
        n += 1
        tn = -t * (2 * n) * (2 * n + 1) / x2
        if abs(tn) >= abs(t) or n > 60:
            break
        t = tn
        if abs(t) < 1e-18:
            break
    return f / x, g / x2


def _aux_fg(x: float, eps: float) -> tuple[float, float]:
    if x >= ASYMPTOTIC_X:
        return aux_fg_asymptotic(x)
    return aux_fg_cf(x, eps)


def si(x: float, crossover: float = 4.0, eps: float = 1e-12) -> float:
    """si(x) = Si(x) - pi/2; si(0) = -pi/2, si(inf) = 0."""
    if x < 0:
        raise ValueError(f"si requires x >= 0, got {x}")
    if x < crossover:
        s, _ = sici_series(x, 0.01 * eps)
        return s - HALF_PI
    f, g = _aux_fg(x, 0.01 * eps)
    return -f * math.cos(x) - g * math.sin(x)


def ci(x: float, crossover: float = 4.0, eps: float = 1e-12) -> float:
    """Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt; diverges to -inf at 0."""
    if not x > 0:
        raise ValueError(f"Ci requires x > 0, got {x}")
    if x < crossover:
        _, cin = sici_series(x, 0.01 * eps)
        return EULER_GAMMA + math.log(x) - cin
    f, g = _aux_fg(x, 0.01 * eps)
    return f * math.sin(x) - g * math.cos(x)


def aux_f(x: float, crossover: float = 4.0, eps: float = 1e-12) -> float:
    """aux_f(x) = Ci(x) sin x - si(x) cos x;  aux_f(0) = pi/2, ~ 1/x at infinity.

    Below the crossover the Ci*sin log singularity is cancelled analytically:
    aux_f = pi/2 cos x + (gamma + ln x) sin x - Cin sin x - Si cos x.
    """
    if x < 0:
        raise ValueError(f"aux_f requires x >= 0, got {x}")
    if x == 0.0:
        return HALF_PI
    if x < crossover:
        s, cin = sici_series(x, 0.01 * eps)
        sn, cs = math.sin(x), math.cos(x)
        return HALF_PI * cs + (EULER_GAMMA + math.log(x) - cin) * sn - s * cs
    f, _ = _aux_fg(x, 0.01 * eps)
    return f


def aux_g(x: float, crossover: float = 4.0, eps: float = 1e-12) -> float:
    """aux_g(x) = d aux_f/dx = Ci(x) cos x + si(x) sin x; ~ gamma + ln x at 0."""
    if not x > 0:
        raise ValueError(f"aux_g requires x > 0, got {x}")
    if x < crossover:
        s, cin = sici_series(x, 0.01 * eps)
        sn, cs = math.sin(x), math.cos(x)
        return -HALF_PI * sn + (EULER_GAMMA + math.log(x) - cin) * cs + s * sn
    _, g = _aux_fg(x, 0.01 * eps)
    return -g


# geometric factor G(x) = sin x/x + 2 cos x/x^2 - 2 sin x/x^3
# Taylor coefficients  (-1)^m [1/(2m+1)! - 2/(2m+2)! + 2/(2m+3)!]
_GEOM_COEF = (
    1.0 / 3.0,
    -1.0 / 10.0,
    1.0 / 168.0,
    -1.0 / 6480.0,
    1.0 / 443520.0,
    -1.0 / 47174400.0,
    1.0 / 7185024000.0,
)


def geom_g(x: float) -> float:
    """Geometric wall factor; G(0) = 1/3, decays as sin x/x."""
    ax = abs(x)
    if ax < GEOM_SERIES_X:
        x2 = x * x
        r = 0.0
        for c in reversed(_GEOM_COEF):
            r = r * x2 + c
        return r
    return math.sin(x) / x + 2.0 * math.cos(x) / (x * x) - 2.0 * math.sin(x) / (x * x * x)


def h0rr(x: float) -> float:
    """Radiation-reaction vacuum kernel -pi (cos x + x sin x - x^2 cos x / 2)."""
    if x < 0:
        raise ValueError(f"h0rr requires x >= 0, got {x}")
    return -PI * (math.cos(x) + x * math.sin(x) - 0.5 * x * x * math.cos(x))


def _h0_series(x: float) -> float:
    # -pi + x + L(x^3/3 - x^5/10 + x^7/168 - x^9/6480)
    #      - x^3/9 + 17 x^5/100 - 187 x^7/14112 + 461 x^9/1166400
    #      + pi(-x^4/8 + x^6/72 - x^8/1920),   L = ln x + gamma
    L = math.log(x) + EULER_GAMMA
    x2 = x * x
    podd = x2 * (1.0 / 3.0 + x2 * (-1.0 / 10.0 + x2 * (1.0 / 168.0 - x2 / 6480.0)))
    prat = x2 * (-1.0 / 9.0 + x2 * (17.0 / 100.0 + x2 * (-187.0 / 14112.0 + x2 * 461.0 / 1166400.0)))
    ppi = x2 * x2 * (-1.0 / 8.0 + x2 * (1.0 / 72.0 - x2 / 1920.0))
    return -PI + x + x * (L * podd + prat) + PI * ppi


def _h0_asymptotic(x: float) -> float:
    # H0 ~ -(1/x) sum_m (-1)^m (2m)! (4m^2+10m+6) / x^{2m}
    x2 = x * x
    s = 0.0
    t = 6.0
    m = 0
    fact = 1.0
    while True:
        s += t
        m += 1
        fact *= (2 * m - 1) * (2 * m)
        tn = (-1) ** m * fact * (4 * m * m + 10 * m + 6) / x2**m
        if abs(tn) >= abs(t) or m > 40:
            break
        t = tn
        if abs(t) < 1e-20 * abs(s):
            break
    return -s / x


def h0(x: float, crossover: float = 4.0, eps: float = 1e-12) -> float:
    """Full vacuum kernel (x^2 - 2) aux_f + 2 x aux_g - x.

    Limits: -pi + x + O(x^3 ln x) at 0, -6/x + 40/x^3 + ... at infinity.
    """
    if not x > 0:
        raise ValueError(f"h0 requires x > 0, got {x}")
    if x < H0_SERIES_X:
        return _h0_series(x)
    if x > H0_ASYMPT_X:
        return _h0_asymptotic(x)
    return (x * x - 2.0) * aux_f(x, crossover, eps) + 2.0 * x * aux_g(x, crossover, eps) - x


def bose_n(y: float) -> float:
    """Bose occupation 1/(e^y - 1), overflow-safe (~e^-y for large y)."""
    if not y > 0:
        raise ValueError(f"bose_n requires y > 0, got {y}")
    if y > 700.0:
        return math.exp(-y)
    return 1.0 / math.expm1(y)


# ---------------------------------------------------------------------------
# array kernels (hot loops of the quadrature integrands)
# ---------------------------------------------------------------------------

def geom_g_many(x: np.ndarray) -> np.ndarray:
    """Vectorized geometric factor."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < GEOM_SERIES_X
    x2 = x * x
    ser = np.zeros_like(x)
    for c in reversed(_GEOM_COEF):
        ser = ser * x2 + c
    xl = np.where(small, 1.0, x)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.sin(xl) / xl + 2.0 * np.cos(xl) / (xl * xl) - 2.0 * np.sin(xl) / (xl * xl * xl)
    return np.where(small, ser, direct)


def thermal_integrand(u: np.ndarray, x0: float, theta: float) -> np.ndarray:
    """u^3 G(x0 u) / [(1 - u^2)(e^{2u/theta} - 1)] on u > 0 (0 at u <= 0).

    This is the raw Bose-weighted integrand with its simple pole at u = 1;
    the principal-value subtraction is applied by the caller.
    """
    u = np.asarray(u, dtype=float)
    pos = u > 0.0
    us = np.where(pos, u, 1.0)
    y = 2.0 * us / theta
    with np.errstate(divide="ignore", over="ignore", under="ignore"):
        nb = np.where(y > 700.0, np.exp(-y), 1.0 / np.expm1(np.minimum(y, 700.0)))
        val = us**3 * geom_g_many(x0 * us) * nb / (1.0 - us * us)
    return np.where(pos, val, 0.0)
