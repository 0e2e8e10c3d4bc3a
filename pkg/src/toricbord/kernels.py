"""Row kernels for the congruence sweeps, compiled when available.

``BACKEND`` is ``"compiled"`` when the Cython extension imported and
``"python"`` otherwise.  Set ``TORICBORD_PURE_PYTHON=1`` to force the fallback.
"""
import os

from toricbord import _kernels_py as python_kernels

compiled_kernels = None
if not os.environ.get("TORICBORD_PURE_PYTHON"):
    try:
        from toricbord import _kernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

_active = compiled_kernels or python_kernels
BACKEND = "compiled" if compiled_kernels is not None else "python"

lucas_row = _active.lucas_row
granville_row = _active.granville_row
factorial_p_table = _active.factorial_p_table
MAX_MODULUS = _active.MAX_MODULUS


def available_backends():
    out = {"python": python_kernels}
    if compiled_kernels is not None:
        out["compiled"] = compiled_kernels
    return out
