"""Kernel backend selection.

The hot loops of projective-line enumeration exist twice: a Cython
extension (``_native``) and a pure-Python fallback (``_fallback``) with
identical signatures and results. The extension is preferred when its
import succeeds; set ``RINGLINE_KERNELS=python`` or ``=native`` to force
a backend. ``benchmarks/bench_kernels.py`` compares the two.
"""

import os

from . import _fallback

try:
    from . import _native
except ImportError:
    _native = None


def available_backends():
    """Name -> kernel module, for tests and benchmarks."""
    backends = {"python": _fallback}
    if _native is not None:
        backends["native"] = _native
    return backends


def _select():
    forced = os.environ.get("RINGLINE_KERNELS")
    if forced in (None, ""):
        return _native if _native is not None else _fallback
    if forced == "python":
        return _fallback
    if forced == "native":
        if _native is None:
            raise ImportError(
                "RINGLINE_KERNELS=native, but the compiled kernels are not installed"
            )
        return _native
    raise ValueError(f"RINGLINE_KERNELS must be 'python' or 'native', not {forced!r}")


backend = _select()
BACKEND = backend.BACKEND
admissible_mask = backend.admissible_mask
unit_orbits = backend.unit_orbits
distant_matrix = backend.distant_matrix
