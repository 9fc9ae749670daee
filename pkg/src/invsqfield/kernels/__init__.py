"""Backend dispatch for the hot numeric kernels.

The default backend is numba (JIT-compiled loops). Set the environment
variable ``INVSQFIELD_BACKEND=numpy`` before import to force the pure-numpy
fallback, or ``INVSQFIELD_BACKEND=numba`` to require numba (import fails if
it is missing). Both backends expose the same three functions:

    field_values(points, sources, weights)     -> (values, min_sqdist)
    field_gradients(points, sources, weights)  -> (gradients, min_sqdist)
    field_laplacians(points, sources, weights) -> (laplacians, min_sqdist)

``benchmarks/bench_kernels.py`` times the two backends side by side.
"""

import os

_requested = os.environ.get("INVSQFIELD_BACKEND", "").strip().lower()

if _requested in ("", "numba"):
    try:
        from . import _numba as _impl
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import _numpy as _impl
        BACKEND = "numpy"
elif _requested == "numpy":
    from . import _numpy as _impl
    BACKEND = "numpy"
else:
    raise RuntimeError(
        f"INVSQFIELD_BACKEND={_requested!r} not recognized; use 'numba' or 'numpy'"
    )

field_values = _impl.field_values
field_gradients = _impl.field_gradients
field_laplacians = _impl.field_laplacians
