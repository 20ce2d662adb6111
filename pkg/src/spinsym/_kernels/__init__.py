"""Hot-loop kernels with a compiled/pure backend switch.

The compiled extension (``spinsym._kernels._fast``, built from Cython) and
the pure-Python module (``_pure``) implement identical semantics on scaled
integer coordinate tuples.  The compiled backend is preferred when it
imported successfully; set ``SPINSYM_PURE=1`` to force the fallback.
"""

import os

from . import _pure

_impl = _pure
BACKEND = "pure"

if os.environ.get("SPINSYM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        BACKEND = "fast"
    except ImportError:
        pass

dominant_conjugate = _impl.dominant_conjugate
weyl_orbit = _impl.weyl_orbit
freudenthal = _impl.freudenthal
subset_sums = _impl.subset_sums


def get_backend() -> str:
    return BACKEND
