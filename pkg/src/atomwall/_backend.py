"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ATOMWALL_PURE_PYTHON=1 forces the pure-Python kernels
(useful for debugging and for the backend benchmark).
"""
import os

if os.environ.get("ATOMWALL_PURE_PYTHON"):
    from . import _kernels_py as kernels
    BACKEND_NAME = "python"
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
        BACKEND_NAME = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]
        BACKEND_NAME = "python"
