"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module with identical semantics is imported instead.
"""

try:
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _pykernels as _impl

    BACKEND = "python"

poly_mul = _impl.poly_mul
poly_permute = _impl.poly_permute
rref = _impl.rref

__all__ = ["BACKEND", "poly_mul", "poly_permute", "rref"]
