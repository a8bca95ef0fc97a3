"""Monte Carlo kernel selection: compiled extension if available, else pure Python.

Set ``SPINGATES_PURE_PYTHON=1`` to force the fallback (used by the
backend-comparison benchmark and tests).
"""

import os

if os.environ.get("SPINGATES_PURE_PYTHON"):
    from . import _mc_py as _impl
else:
    try:
        from . import _mc_core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _mc_py as _impl

BACKEND: str = _impl.BACKEND
mc_infidelities = _impl.mc_infidelities
