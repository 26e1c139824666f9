"""Kernel backend selection.

Prefers the compiled Cython kernel when it was built, otherwise falls
back to the pure-Python implementation.  Set TREEWALKS_KERNEL=python in
the environment to force the fallback (used by the backend-parity tests
and the benchmark).
"""

from __future__ import annotations

import os

from treewalks._kernel import _pykernel

if os.environ.get("TREEWALKS_KERNEL") == "python":
    _impl = _pykernel
else:
    try:
        from treewalks._kernel import _ckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernel

BACKEND = _impl.BACKEND
enumerate_masks = _impl.enumerate_masks
component_histogram = _impl.component_histogram

__all__ = ["BACKEND", "enumerate_masks", "component_histogram"]
