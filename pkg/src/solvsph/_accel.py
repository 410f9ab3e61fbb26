"""Select the compiled kernels when available.

Set ``SOLVSPH_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

BACKEND = "python"

if os.environ.get("SOLVSPH_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import compatible_subsets, echelon_int, rank_int  # noqa: F401
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._kernels_py import compatible_subsets, echelon_int, rank_int  # noqa: F401
