"""Hot-kernel dispatch: compiled ``_kernels`` when built, numpy fallback otherwise.

Set ``REALCHAR_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _fallback

BACKEND = "python"
if not os.environ.get("REALCHAR_PURE_PYTHON"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _fallback
else:
    _impl = _fallback

label_components = _impl.label_components
lookup = _impl.lookup
conj_successor = _impl.conj_successor
pair_counts = _impl.pair_counts
rref_mod = _impl.rref_mod
