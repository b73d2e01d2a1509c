"""Kernel dispatch: compiled core when importable, pure Python otherwise.

Set ``LCDEG_PURE=1`` to force the pure-Python kernels.  The compiled core
only handles pools of at most 62 elements whose vectors fit a 64-bit word;
wider inputs transparently use the Python kernels.
"""

from __future__ import annotations

import os

from . import _pycore

try:
    if os.environ.get("LCDEG_PURE"):
        raise ImportError("pure kernels requested")
    from . import _core
except ImportError:
    _core = None

BACKEND = "compiled" if _core is not None else "python"


def _fits_word(vecs, tags) -> bool:
    return len(vecs) <= 62 and all(x >> 64 == 0 for x in vecs) and all(x >> 64 == 0 for x in tags)


def gray_min(vecs, tags, start, stop, backend=None):
    """See ``_pycore.gray_min``."""
    if _pick(backend, vecs, tags) == "compiled":
        return _core.gray_min(vecs, tags, start, stop)
    return _pycore.gray_min(vecs, tags, start, stop)


def falsify(vecs, tags, threshold, trials, seed, backend=None):
    """See ``_pycore.falsify``."""
    if _pick(backend, vecs, tags) == "compiled":
        return _core.falsify(vecs, tags, threshold, trials, seed)
    return _pycore.falsify(vecs, tags, threshold, trials, seed)


lc_orbit = _pycore.lc_orbit


def _pick(backend, vecs, tags) -> str:
    if backend == "python":
        return "python"
    if backend == "compiled" and _core is None:
        raise RuntimeError("compiled core is not available")
    if _core is not None and _fits_word(vecs, tags):
        return "compiled"
    if backend == "compiled":
        raise ValueError("input too wide for the compiled core")
    return "python"


def gray_subset(index: int) -> int:
    return index ^ (index >> 1)
