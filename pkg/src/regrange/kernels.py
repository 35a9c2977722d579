"""Kernel backend selection.

The compiled extension is preferred when importable; set REGRANGE_PURE=1 to
force the pure-Python twin.  Both expose the same API and are value-identical
(see tests/test_kernels.py).
"""

import os

if os.environ.get("REGRANGE_PURE"):
    from regrange import _kernels_py as _impl
else:
    try:
        from regrange import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from regrange import _kernels_py as _impl

BACKEND = _impl.BACKEND

binomial = _impl.binomial
macaulay_tops = _impl.macaulay_tops
growth = _impl.growth
shrink = _impl.shrink
iter_terms = _impl.iter_terms
bucket_count = _impl.bucket_count
top_terms = _impl.top_terms
expand_terms = _impl.expand_terms
is_borel_set = _impl.is_borel_set
addable_terms = _impl.addable_terms
