"""Kernel selection: compiled extension when built, pure Python otherwise.

Set ``QUIVSHEAF_BACKEND=python`` before import to force the fallback
(used by the benchmark and the backend-agreement tests).
"""

import os

if os.environ.get("QUIVSHEAF_BACKEND", "").strip().lower() in ("python", "pure"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]


def backend_name() -> str:
    return kernels.BACKEND
