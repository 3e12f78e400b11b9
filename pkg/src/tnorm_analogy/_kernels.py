"""Backend selection for the Frank kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Both expose the same five functions and a ``BACKEND`` tag.
"""

try:
    from tnorm_analogy import _ckernels as _impl
except ImportError:  # extension not built
    from tnorm_analogy import _pykernels as _impl

BACKEND = _impl.BACKEND
frank_tnorm = _impl.frank_tnorm
frank_tconorm = _impl.frank_tconorm
frank_residuals = _impl.frank_residuals
diff_sweep = _impl.diff_sweep
diff_over_params = _impl.diff_over_params

__all__ = [
    "BACKEND",
    "frank_tnorm",
    "frank_tconorm",
    "frank_residuals",
    "diff_sweep",
    "diff_over_params",
]
