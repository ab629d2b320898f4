"""Numeric kernels with a selectable backend.

The environment variable ``EPITRACK_KERNELS`` picks the implementation:

* ``auto`` (default) - numba when importable, else pure numpy
* ``numba``          - require the jitted kernels, fail if unavailable
* ``numpy``          - force the pure-numpy path

Both backends are importable directly (``kernels._numpy`` /
``kernels._numba``) so tests can compare them regardless of the flag.
"""

from __future__ import annotations

import os

from ..errors import InvalidArgumentError

_CHOICES = ("auto", "numba", "numpy")
_requested = os.environ.get("EPITRACK_KERNELS", "auto").strip().lower()
if _requested not in _CHOICES:
    raise InvalidArgumentError(
        f"EPITRACK_KERNELS must be one of {_CHOICES}, got {_requested!r}"
    )

if _requested in ("auto", "numba"):
    try:
        from ._numba import (  # noqa: F401
            carry_forward_at,
            carry_forward_grid,
            deltas,
            rollup_grid,
            running_max,
        )

        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from ._numpy import (  # noqa: F401
            carry_forward_at,
            carry_forward_grid,
            deltas,
            rollup_grid,
            running_max,
        )

        BACKEND = "numpy"
else:
    from ._numpy import (  # noqa: F401
        carry_forward_at,
        carry_forward_grid,
        deltas,
        rollup_grid,
        running_max,
    )

    BACKEND = "numpy"


def backend_name() -> str:
    """The kernel backend active in this process."""
    return BACKEND
