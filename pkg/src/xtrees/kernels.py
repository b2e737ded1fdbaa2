"""Kernel selection: compiled embedding search when available, else pure Python.

The compiled extension (xtrees._fastmatch, built from Cython) and the pure
module (xtrees._match_py) expose an identical ``order_embeddings`` function;
whichever is active is re-exported here. Selection happens once at import:

* default: use the compiled kernel if the extension imported, else fall back;
* ``XTREES_KERNEL=pure`` forces the pure-Python kernel;
* ``XTREES_KERNEL=compiled`` requires the extension and raises if missing.

``ACTIVE_KERNEL`` names the choice, and ``available_kernels()`` returns every
loadable implementation keyed by name (used by the benchmark script).
"""

from __future__ import annotations

import os

from . import _match_py

try:
    from . import _fastmatch
except ImportError:  # extension not built; pure Python is fully supported
    _fastmatch = None

_choice = os.environ.get("XTREES_KERNEL", "").strip().lower()
if _choice == "pure":
    _impl = _match_py
elif _choice == "compiled":
    if _fastmatch is None:
        raise ImportError(
            "XTREES_KERNEL=compiled but the xtrees._fastmatch extension is "
            "not built; install with the Cython build or unset the variable"
        )
    _impl = _fastmatch
elif _choice in ("", "auto"):
    _impl = _fastmatch if _fastmatch is not None else _match_py
else:
    raise ImportError(f"unknown XTREES_KERNEL value: {_choice!r}")

ACTIVE_KERNEL = "compiled" if _impl is _fastmatch and _fastmatch is not None else "pure"

order_embeddings = _impl.order_embeddings


def available_kernels():
    """Every loadable kernel implementation, keyed by name."""
    found = {"pure": _match_py.order_embeddings}
    if _fastmatch is not None:
        found["compiled"] = _fastmatch.order_embeddings
    return found
