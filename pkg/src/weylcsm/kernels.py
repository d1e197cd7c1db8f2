"""Backend selection for the polynomial kernels.

The compiled module is used when it imports; set ``WEYLCSM_PURE=1`` to force
the pure-Python implementation.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("WEYLCSM_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        _impl = _pykernels

BITS = _pykernels.BITS
MASK = _pykernels.MASK
BACKEND: str = _impl.BACKEND

mul = _impl.mul
lincomb = _impl.lincomb
scale = _impl.scale
exact_div_int = _impl.exact_div_int
content = _impl.content
div_linear = _impl.div_linear
substitute = _impl.substitute
negate_odd = _impl.negate_odd

__all__ = [
    "BACKEND",
    "BITS",
    "MASK",
    "content",
    "div_linear",
    "exact_div_int",
    "lincomb",
    "mul",
    "negate_odd",
    "scale",
    "substitute",
]
