"""Selects the polynomial kernel at import time.

The compiled extension is preferred when it has been built; setting
TANCONE_PURE_KERNEL=1 forces the pure-Python fallback.  Everything
downstream receives the kernel as a module object, so benchmarks and
parity tests can drive both implementations side by side.
"""

import os

from . import _kernel_py

if os.environ.get("TANCONE_PURE_KERNEL"):
    active = _kernel_py
else:
    try:
        from . import _kernel_c as active  # type: ignore[no-redef]
    except ImportError:
        active = _kernel_py


def kernel_name() -> str:
    return active.KERNEL_NAME


def available_kernels():
    kernels = {"python": _kernel_py}
    try:
        from . import _kernel_c

        kernels["cython"] = _kernel_c
    except ImportError:
        pass
    return kernels
