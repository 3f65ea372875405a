"""Backend selection for the hot kernels.

Prefers the compiled extension, falls back to pure Python when it is not
built.  ``QAPPELL_KERNELS=py`` forces the fallback, ``QAPPELL_KERNELS=c``
makes a missing extension a hard error (useful in benchmarks and CI).
Both backends are contract-identical; ``tests/test_kernels.py`` checks
them against each other.
"""

from __future__ import annotations

import os

_choice = os.environ.get("QAPPELL_KERNELS", "").strip().lower()
if _choice not in ("", "c", "py"):
    raise RuntimeError(f"QAPPELL_KERNELS must be 'c' or 'py', got {_choice!r}")

if _choice == "py":
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "c":
            raise RuntimeError("QAPPELL_KERNELS=c but the compiled extension is not built")
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND

poly_add = _impl.poly_add
poly_mul = _impl.poly_mul
poly_scale = _impl.poly_scale
poly_deriv_x = _impl.poly_deriv_x
poly_deriv_y = _impl.poly_deriv_y
poly_dilate = _impl.poly_dilate
poly_eval = _impl.poly_eval
series_mul_scalar = _impl.series_mul_scalar
series_mul_poly = _impl.series_mul_poly
series_recip_scalar = _impl.series_recip_scalar
