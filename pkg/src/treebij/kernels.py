"""Brute-force tally kernels, compiled when available.

The Cython build (``_ckernels``) is used if it imports; otherwise the
pure-Python twin in ``_pykernels`` is.  Setting ``TREEBIJ_PURE_PYTHON=1``
forces the fallback.  ``BACKEND`` names the active implementation.
"""
import os

from . import _pykernels

if os.environ.get("TREEBIJ_PURE_PYTHON") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

tally_functions = _impl.tally_functions
tally_triply_rooted = _impl.tally_triply_rooted
