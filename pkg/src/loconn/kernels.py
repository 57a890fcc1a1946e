"""Hot-loop kernels, compiled when available.

The Cython build (``_kernels_c``) is used if it imports; otherwise the
pure-Python module ``_kernels_py`` is used.  Set ``LOCONN_PURE_PYTHON=1``
to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("LOCONN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

cyclable_table = _impl.cyclable_table
canonical_code = _impl.canonical_code
embed = _impl.embed
MAX_TABLE_ORDER = _impl.MAX_TABLE_ORDER
MAX_CANON_ORDER = _impl.MAX_CANON_ORDER
