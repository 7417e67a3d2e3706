"""Kernel backend selection.

The hot inner loops (modular polynomial arithmetic over F_p) live in a
small compiled extension.  If the extension is unavailable, or the
environment variable DRINFELD_PURE_PYTHON is set to a nonempty value,
the pure-Python implementation with the identical API is used instead.
"""

import os

if os.environ.get("DRINFELD_PURE_PYTHON"):
    from . import pure as _impl
else:
    try:
        from . import _corelib as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

BACKEND = _impl.BACKEND
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_mul = _impl.poly_mul
poly_rem = _impl.poly_rem
poly_divmod = _impl.poly_divmod
mul_mod = _impl.mul_mod
pow_mod = _impl.pow_mod
mat_vec = _impl.mat_vec

__all__ = [
    "BACKEND", "poly_add", "poly_sub", "poly_mul", "poly_rem",
    "poly_divmod", "mul_mod", "pow_mod", "mat_vec",
]
