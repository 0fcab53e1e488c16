"""Hot enumeration/summation kernels.

The compiled backend is used when it was built; set ``QTCOMB_PURE_PYTHON=1``
to force the pure-Python fallback.
"""
import os

BACKEND = "python"

if not os.environ.get("QTCOMB_PURE_PYTHON"):
    try:
        from ._ckernels import box_product, chain_filling, strip_chains, weighted_product_sum
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import box_product, chain_filling, strip_chains, weighted_product_sum

__all__ = ["BACKEND", "box_product", "chain_filling", "strip_chains", "weighted_product_sum"]
