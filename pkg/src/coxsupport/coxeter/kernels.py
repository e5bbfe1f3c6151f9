"""Pick the compiled enumeration kernel when available, else the numpy one.

Set ``COXSUPPORT_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
bfs_elements = _kernels_py.bfs_elements

if os.environ.get("COXSUPPORT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        bfs_elements = _kernels.bfs_elements
        BACKEND = "cython"
