"""Benchmark: compiled kernel extension vs the pure-Python fallback.

Times the workloads that dominate real use:

  * scalar special-function sweeps (H0 / si / Ci per grid point), which is
    what every potential sweep reduces to;
  * the vectorized wall-factor kernel used inside quadrature integrands;
  * one full thermal principal-value quadrature.

Run:  python benchmarks/bench_kernels.py [--points N]

The backends are imported directly (no subprocess games): `_kernels_cy` is
skipped with a note if the extension was not built.
"""
from __future__ import annotations

import argparse
import importlib
import time

import numpy as np


def _load_backends():
    backends = {}
    from atomwall import _kernels_py

    backends["python"] = _kernels_py
    try:
        backends["cython"] = importlib.import_module("atomwall._kernels_cy")
    except ImportError:
        print("note: compiled extension not available; timing pure Python only")
    return backends


def bench_scalar_sweep(kernels, xs) -> float:
    t0 = time.perf_counter()
    acc = 0.0
    for x in xs:
        acc += kernels.h0(x) - kernels.h0rr(x) + kernels.si(x) + kernels.ci(x)
    dt = time.perf_counter() - t0
    assert np.isfinite(acc)
    return dt


def bench_array_kernel(kernels, us) -> float:
    t0 = time.perf_counter()
    for _ in range(50):
        out = kernels.thermal_integrand(us, 40.0, 0.5)
    dt = (time.perf_counter() - t0) / 50.0
    assert np.all(np.isfinite(out))
    return dt


def bench_thermal_quadrature(backend_name: str) -> float:
    import os
    import subprocess
    import sys

    # v_T_quadrature picks its kernels at import time, so time it in a slave
    # interpreter with the backend forced through the environment
    code = (
        "import time; import atomwall\n"
        "t0 = time.perf_counter()\n"
        "for z in (1.0, 2.0, 3.0):\n"
        "    atomwall.v_T_quadrature(100.0*z, 0.04, rel_tol=1e-10)\n"
        "print(time.perf_counter() - t0)\n"
    )
    env = dict(os.environ)
    env.pop("ATOMWALL_PURE_PYTHON", None)
    if backend_name == "python":
        env["ATOMWALL_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                         text=True, env=env, check=True)
    return float(out.stdout.strip())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=20000,
                    help="grid points for the scalar sweep (default 20000)")
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    xs = [float(x) for x in 10.0 ** rng.uniform(-3, 3, args.points)]
    us = rng.uniform(1e-6, 5.0, 4096)

    backends = _load_backends()
    rows = []
    for name, kernels in backends.items():
        t_scalar = bench_scalar_sweep(kernels, xs)
        t_array = bench_array_kernel(kernels, us)
        t_quad = bench_thermal_quadrature(name)
        rows.append((name, t_scalar, t_array, t_quad))

    print(f"\nscalar sweep: {args.points} points of h0+h0rr+si+ci; "
          "array kernel: 4096-node thermal integrand; "
          "quadrature: 3 thermal PV integrals at k0*lambda_T = 50")
    print(f"{'backend':9s} {'scalar sweep':>14s} {'array kernel':>14s} {'pv quadrature':>14s}")
    for name, t1, t2, t3 in rows:
        print(f"{name:9s} {t1*1e3:>12.1f}ms {t2*1e6:>12.1f}us {t3*1e3:>12.1f}ms")
    if len(rows) == 2:
        (n0, a1, a2, a3), (n1, b1, b2, b3) = rows
        print(f"\nspeedup ({n1}/{n0}): scalar {a1/b1:.1f}x, array {a2/b2:.1f}x, "
              f"quadrature {a3/b3:.1f}x")


if __name__ == "__main__":
    main()
