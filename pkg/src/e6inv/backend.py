"""Kernel backend selection.

The hot loops (term-map multiply, shears, Frobenius) live in a compiled
Cython module when available; a pure-Python twin is always present.  Set
``E6INV_BACKEND=pure`` to force the fallback, ``compiled`` to require the
extension (raises if it is missing).
"""

from __future__ import annotations

import os

from e6inv import _kernels_pure

_FORCED = os.environ.get("E6INV_BACKEND", "").strip().lower()

if _FORCED == "pure":
    _impl = _kernels_pure
else:
    try:
        from e6inv import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        if _FORCED == "compiled":
            raise
        _impl = _kernels_pure

K = _impl


def backend_name() -> str:
    return K.BACKEND


def set_backend(name: str) -> None:
    """Swap the active kernel (used by tests and the benchmark)."""
    global K
    if name == "pure":
        K = _kernels_pure
    elif name == "compiled":
        from e6inv import _speedups

        K = _speedups
    else:
        raise ValueError(f"unknown backend {name!r}")
