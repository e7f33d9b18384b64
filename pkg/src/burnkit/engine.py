"""Kernel selection: compiled extension when available, pure Python otherwise.

Set BURNKIT_PURE=1 to force the pure-Python kernel (used by the benchmark
and by tests that exercise both implementations).
"""

import os

if os.environ.get("BURNKIT_PURE"):
    from . import _pyburn as _impl

    KERNEL_NAME = "python"
else:
    try:
        from . import _fastburn as _impl  # type: ignore[attr-defined]

        KERNEL_NAME = "compiled"
    except ImportError:
        from . import _pyburn as _impl

        KERNEL_NAME = "python"

burn_times_csr = _impl.burn_times_csr
