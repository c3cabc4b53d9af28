"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when the
environment variable AFFGROWTH_PURE is set to a non-empty value, the
pure-Python twins are used.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if not os.environ.get("AFFGROWTH_PURE"):
    try:
        from . import _ckernels as _impl  # noqa: F811

        BACKEND = "cython"
    except ImportError:  # extension not built
        pass

apply_schedule = _impl.apply_schedule
octahedra_ok = _impl.octahedra_ok
rhombi_ok = _impl.rhombi_ok
search_fillings = _impl.search_fillings


def backends():
    """Every importable backend module, keyed by name, for cross-checking."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
