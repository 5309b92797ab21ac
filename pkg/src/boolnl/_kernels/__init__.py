"""Kernel backend selection.

Two interchangeable backends provide the hot loops: ``fast`` (Cython) and
``pure`` (NumPy).  The compiled one is preferred when importable; set
``BOOLNL_BACKEND=pure`` or ``=fast`` to force a choice at import time, or
use :func:`use` to switch temporarily (benchmarks, parity tests).
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import pure

try:
    from . import _fastkern as fast
except ImportError:  # extension not built
    fast = None

_BACKENDS = {"pure": pure}
if fast is not None:
    _BACKENDS["fast"] = fast


def _initial():
    forced = os.environ.get("BOOLNL_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise ImportError(
                f"BOOLNL_BACKEND={forced!r} is not available "
                f"(have: {', '.join(sorted(_BACKENDS))})"
            )
        return _BACKENDS[forced]
    return _BACKENDS.get("fast", pure)


_active = _initial()


def backend():
    """The currently active kernel module."""
    return _active


def active_name() -> str:
    return _active.NAME


def available() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get(name: str):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise KeyError(
            f"unknown backend {name!r} (have: {', '.join(sorted(_BACKENDS))})"
        ) from None


@contextmanager
def use(name: str):
    """Temporarily switch the active backend (not thread-safe)."""
    global _active
    prev = _active
    _active = get(name)
    try:
        yield _active
    finally:
        _active = prev
