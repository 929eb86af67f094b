"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imported successfully
and the framework fits in 63 bits; otherwise the pure-Python twin runs.
Set ``SBAF_PURE_PYTHON=1`` to force the fallback for the whole process.
"""

import os
from contextlib import contextmanager

from . import _kernels_py as python_kernels
from ._kernels_py import (  # noqa: F401  (re-exported mode constants)
    ADMISSIBLE, COMPLETE, CONFLICT_FREE, STRONG, STRONGLY_COHERENT,
    SUPPORT_CLOSED_ADMISSIBLE, WEAK, WEAKLY_COHERENT,
)

try:
    from . import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

MAX_COMPILED_BITS = 63

_force_python = os.environ.get("SBAF_PURE_PYTHON", "") not in ("", "0")


def compiled_available():
    return compiled_kernels is not None


def backend_name():
    return "python" if _force_python or compiled_kernels is None else compiled_kernels.BACKEND


def select(*sizes):
    """Kernel module for a problem whose masks need ``max(sizes)`` bits."""
    if _force_python or compiled_kernels is None:
        return python_kernels
    if sizes and max(sizes) > MAX_COMPILED_BITS:
        return python_kernels
    return compiled_kernels


@contextmanager
def forced_python(enabled=True):
    """Temporarily route every call to the pure-Python kernels."""
    global _force_python
    previous, _force_python = _force_python, enabled
    try:
        yield
    finally:
        _force_python = previous
