"""Backend selection for the elimination kernel.

The compiled extension is used when it imports; otherwise, or when the
environment sets ``BREDON_PURE_PYTHON=1``, the pure-Python twin runs.  On
int64 overflow the compiled path reruns the matrix in pure Python.
"""

from __future__ import annotations

import logging
import os

from . import _elim_py

log = logging.getLogger(__name__)

try:
    from . import _elim_ext
except ImportError:  # extension not built
    _elim_ext = None

if os.environ.get("BREDON_PURE_PYTHON", "").strip() not in ("", "0"):
    BACKEND = "python"
elif _elim_ext is not None:
    BACKEND = "compiled"
else:
    BACKEND = "python"


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _elim_ext is not None else [])


def unit_eliminate(nrows, ncols, indptr, indices, data, backend: str | None = None):
    backend = backend or BACKEND
    if backend == "compiled":
        if _elim_ext is None:
            raise RuntimeError("compiled kernel requested but bredon._elim_ext is not built")
        try:
            return _elim_ext.unit_eliminate(nrows, ncols, indptr, indices, data)
        except OverflowError:
            log.debug("int64 overflow in compiled kernel; falling back to Python integers")
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _elim_py.unit_eliminate(nrows, ncols, indptr, indices, data)
