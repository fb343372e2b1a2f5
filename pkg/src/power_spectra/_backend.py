"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set POWER_SPECTRA_BACKEND=python to force the fallback (used by the
backend-comparison tests and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("POWER_SPECTRA_BACKEND", "").lower() == "python":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND_NAME: str = _impl.BACKEND_NAME
jacobi_eigenvalues = _impl.jacobi_eigenvalues
power_iteration = _impl.power_iteration
