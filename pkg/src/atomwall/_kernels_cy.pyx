# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of `_kernels_py`.

Same functions, same branch boundaries, same algorithms; see the pure module
for the documentation.  Scalar kernels are plain C loops; array kernels fill
numpy buffers through typed memoryviews.
"""
from libc.math cimport cos, exp, expm1, fabs, log, sin

import numpy as np

cdef double EULER_GAMMA = 0.577215664901532860606512090082
cdef double PI = 3.14159265358979323846264338327950288
cdef double HALF_PI = 1.57079632679489661923132169163975144

cdef double ASYMPTOTIC_X = 40.0
cdef double H0_SERIES_X = 0.2
cdef double H0_ASYMPT_X = 50.0
cdef double GEOM_SERIES_X = 0.5

cdef double[7] GEOM_COEF
GEOM_COEF[0] = 1.0/3.0
GEOM_COEF[1] = -1.0/10.0
GEOM_COEF[2] = 1.0/168.0
GEOM_COEF[3] = -1.0/6480.0
GEOM_COEF[4] = 1.0/443520.0
GEOM_COEF[5] = -1.0/47174400.0
GEOM_COEF[6] = 1.0/7185024000.0


cdef inline void _sici_series(double x, double eps, double* si_out, double* cin_out) nogil:
    cdef double x2 = x*x
    cdef double s = 0.0, t = x
    cdef int n = 0
    while True:
        s += t/(2*n + 1)
        n += 1
        t *= -x2/((2*n)*(2*n + 1))
        if fabs(t) <= eps*(fabs(s) + 1e-300) or n > 120:
            break
    cdef double cin = 0.0
    t = x2/2.0
    n = 1
    while True:
        cin += t/(2*n)
        n += 1
        t *= -x2/((2*n - 1)*(2*n))
        if fabs(t) <= eps*(fabs(cin) + 1e-300) or n > 120:
            break
    si_out[0] = s
    cin_out[0] = cin


cdef inline void _aux_fg_cf(double x, double eps, double* f_out, double* g_out) nogil:
    # g - i f = exp(ix) E1(ix); modified Lentz on the even CF of E1.
    cdef double tiny = 1e-300
    cdef double fr = 1.0, fi = x          # f = z + 1, z = ix
    cdef double cr = fr, ci_ = fi
    cdef double dr = 0.0, di = 0.0
    cdef double a, br, bi, tr, ti, den, dlr, dli
    cdef int n
    for n in range(1, 300):
        a = -1.0*n*n
        br = 2.0*n + 1.0
        bi = x
        # D = b + a*D ; C = b + a/C
        tr = br + a*dr
        ti = bi + a*di
        dr = tr; di = ti
        den = cr*cr + ci_*ci_
        if den == 0.0:
            den = tiny
        tr = br + a*cr/den
        ti = bi - a*ci_/den
        cr = tr; ci_ = ti
        den = dr*dr + di*di
        if den == 0.0:
            den = tiny
        tr = dr/den
        ti = -di/den
        dr = tr; di = ti
        # delta = C*D ; f *= delta
        dlr = cr*dr - ci_*di
        dli = cr*di + ci_*dr
        tr = fr*dlr - fi*dli
        ti = fr*dli + fi*dlr
        fr = tr; fi = ti
        if fabs(dlr - 1.0) + fabs(dli) < eps:
            break
    # w = 1/f
    den = fr*fr + fi*fi
    if den == 0.0:
        den = tiny
    f_out[0] = fi/den        # -Im(w)
    g_out[0] = fr/den        # Re(w)


cdef inline void _aux_fg_asym(double x, double* f_out, double* g_out) nogil:
    cdef double x2 = x*x
    cdef double s = 0.0, t = 1.0, tn
    cdef int n = 0
    while True:
        s += t
        n += 1
        tn = -t*(2*n - 1)*(2*n)/x2
        if fabs(tn) >= fabs(t) or n > 60:
            break
        t = tn
        if fabs(t) < 1e-18:
            break
    f_out[0] = s/x
    s = 0.0; t = 1.0; n = 0
    while True:
        s += t
        n += 1
        tn = -t*(2*n)*(2*n + 1)/x2
        if fabs(tn) >= fabs(t) or n > 60:
            break
        t = tn
        if fabs(t) < 1e-18:
            break
    g_out[0] = s/x2


cdef inline void _aux_fg(double x, double eps, double* f_out, double* g_out) nogil:
    if x >= ASYMPTOTIC_X:
        _aux_fg_asym(x, f_out, g_out)
    else:
        _aux_fg_cf(x, eps, f_out, g_out)


def sici_series(double x, double eps=1e-16):
    cdef double s, cin
    _sici_series(x, eps, &s, &cin)
    return s, cin


def aux_fg_cf(double x, double eps=1e-16, int max_iter=300):
    cdef double f, g
    _aux_fg_cf(x, eps, &f, &g)
    return f, g


def aux_fg_asymptotic(double x):
    cdef double f, g
    _aux_fg_asym(x, &f, &g)
    return f, g


def si(double x, double crossover=4.0, double eps=1e-12):
    cdef double s, cin, f, g
    if x < 0:
        raise ValueError(f"si requires x >= 0, got {x}")
    if x < crossover:
        _sici_series(x, 0.01*eps, &s, &cin)
        return s - HALF_PI
    _aux_fg(x, 0.01*eps, &f, &g)
    return -f*cos(x) - g*sin(x)


def ci(double x, double crossover=4.0, double eps=1e-12):
    cdef double s, cin, f, g
    if not x > 0:
        raise ValueError(f"Ci requires x > 0, got {x}")
    if x < crossover:
        _sici_series(x, 0.01*eps, &s, &cin)
        return EULER_GAMMA + log(x) - cin
    _aux_fg(x, 0.01*eps, &f, &g)
    return f*sin(x) - g*cos(x)


def aux_f(double x, double crossover=4.0, double eps=1e-12):
    cdef double s, cin, f, g, sn, cs
    if x < 0:
        raise ValueError(f"aux_f requires x >= 0, got {x}")
    if x == 0.0:
        return HALF_PI
    if x < crossover:
        _sici_series(x, 0.01*eps, &s, &cin)
        sn = sin(x); cs = cos(x)
        return HALF_PI*cs + (EULER_GAMMA + log(x) - cin)*sn - s*cs
    _aux_fg(x, 0.01*eps, &f, &g)
    return f


def aux_g(double x, double crossover=4.0, double eps=1e-12):
    cdef double s, cin, f, g, sn, cs
    if not x > 0:
        raise ValueError(f"aux_g requires x > 0, got {x}")
    if x < crossover:
        _sici_series(x, 0.01*eps, &s, &cin)
        sn = sin(x); cs = cos(x)
        return -HALF_PI*sn + (EULER_GAMMA + log(x) - cin)*cs + s*sn
    _aux_fg(x, 0.01*eps, &f, &g)
    return -g


cdef inline double _geom_g(double x) nogil:
    cdef double x2, r
    cdef int i
    if fabs(x) < GEOM_SERIES_X:
        x2 = x*x
        r = 0.0
        for i in range(6, -1, -1):
            r = r*x2 + GEOM_COEF[i]
        return r
    return sin(x)/x + 2.0*cos(x)/(x*x) - 2.0*sin(x)/(x*x*x)


def geom_g(double x):
    return _geom_g(x)


cdef inline double _h0rr(double x) nogil:
    return -PI*(cos(x) + x*sin(x) - 0.5*x*x*cos(x))


def h0rr(double x):
    if x < 0:
        raise ValueError(f"h0rr requires x >= 0, got {x}")
    return _h0rr(x)


cdef double _h0_series(double x) nogil:
    cdef double L = log(x) + EULER_GAMMA
    cdef double x2 = x*x
    cdef double podd = x2*(1.0/3.0 + x2*(-1.0/10.0 + x2*(1.0/168.0 - x2/6480.0)))
    cdef double prat = x2*(-1.0/9.0 + x2*(17.0/100.0 + x2*(-187.0/14112.0 + x2*461.0/1166400.0)))
    cdef double ppi = x2*x2*(-1.0/8.0 + x2*(1.0/72.0 - x2/1920.0))
    return -PI + x + x*(L*podd + prat) + PI*ppi


cdef double _h0_asymptotic(double x) nogil:
    cdef double x2 = x*x
    cdef double s = 0.0, t = 6.0, tn, fact = 1.0, xp = 1.0
    cdef int m = 0
    while True:
        s += t
        m += 1
        fact *= (2*m - 1)*(2*m)
        xp *= x2
        tn = fact*(4*m*m + 10*m + 6)/xp
        if m % 2 == 1:
            tn = -tn
        if fabs(tn) >= fabs(t) or m > 40:
            break
        t = tn
        if fabs(t) < 1e-20*fabs(s):
            break
    return -s/x


def h0(double x, double crossover=4.0, double eps=1e-12):
    cdef double s, cin, f, g, sn, cs, af, ag
    if not x > 0:
        raise ValueError(f"h0 requires x > 0, got {x}")
    if x < H0_SERIES_X:
        return _h0_series(x)
    if x > H0_ASYMPT_X:
        return _h0_asymptotic(x)
    if x < crossover:
        _sici_series(x, 0.01*eps, &s, &cin)
        sn = sin(x); cs = cos(x)
        af = HALF_PI*cs + (EULER_GAMMA + log(x) - cin)*sn - s*cs
        ag = -HALF_PI*sn + (EULER_GAMMA + log(x) - cin)*cs + s*sn
    else:
        _aux_fg(x, 0.01*eps, &f, &g)
        af = f
        ag = -g
    return (x*x - 2.0)*af + 2.0*x*ag - x


def bose_n(double y):
    if not y > 0:
        raise ValueError(f"bose_n requires y > 0, got {y}")
    if y > 700.0:
        return exp(-y)
    return 1.0/expm1(y)


def geom_g_many(x):
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    for i in range(xv.shape[0]):
        ov[i] = _geom_g(xv[i])
    return out


def thermal_integrand(u, double x0, double theta):
    cdef double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    out = np.empty(uv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    cdef double ui, y, nb
    for i in range(uv.shape[0]):
        ui = uv[i]
        if ui <= 0.0:
            ov[i] = 0.0
            continue
        y = 2.0*ui/theta
        if y > 700.0:
            nb = exp(-y)
        else:
            nb = 1.0/expm1(y)
        ov[i] = ui*ui*ui*_geom_g(x0*ui)*nb/(1.0 - ui*ui)
    return out
