"""Backend selection for the integer kernels.

The compiled extension is preferred; set ``ARTIFACT_PURE_PYTHON=1`` to force
the numpy fallback.
"""

import os

if os.environ.get("ARTIFACT_PURE_PYTHON") == "1":
    from artifact import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from artifact import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        from artifact import _kernels_py as _impl
        BACKEND = "python"

form_doubled = _impl.form_doubled
mutate_exchange = _impl.mutate_exchange
mutate_lambda = _impl.mutate_lambda

__all__ = ["BACKEND", "form_doubled", "mutate_exchange", "mutate_lambda"]
