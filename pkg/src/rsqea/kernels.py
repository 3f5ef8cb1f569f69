"""Backend selection for the hot kernels.

The compiled extension is used when it was built; set ``RSQEA_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

import os

if os.environ.get("RSQEA_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = _impl.NAME
laurent_mul = _impl.laurent_mul
laurent_axpy = _impl.laurent_axpy
rank_mod_p = _impl.rank_mod_p
pencil_nullities = _impl.pencil_nullities

# p < 2**31 keeps every product inside int64
PRIME = 2147483647
