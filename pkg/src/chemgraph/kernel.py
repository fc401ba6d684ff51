"""Kernel backend selection.

The enumeration hot loop (canonical labeling and augmentation) exists in
two interchangeable implementations: a Cython extension built at install
time and a pure-Python twin.  The compiled one is used when importable;
set CHEMGRAPH_PURE=1 to force the pure backend (the benchmark and the
equivalence tests exercise both explicitly).
"""

from __future__ import annotations

import os

from ._kernel_py import MAXN, deserialize, serialize  # byte layout is backend-independent

if os.environ.get("CHEMGRAPH_PURE"):
    from . import _kernel_py as _impl

    IMPLEMENTATION = "pure"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]

        IMPLEMENTATION = "compiled"
    except ImportError:
        from . import _kernel_py as _impl

        IMPLEMENTATION = "pure"

canonical_form = _impl.canonical_form
canonical_labeling = _impl.canonical_labeling
accepted_children = _impl.accepted_children

__all__ = [
    "MAXN",
    "IMPLEMENTATION",
    "canonical_form",
    "canonical_labeling",
    "accepted_children",
    "serialize",
    "deserialize",
]
