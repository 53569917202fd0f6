"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
reference implementation. FRACLIFT_PURE_PYTHON=1 forces the fallback; the
active module is exposed as `impl` and its name as `BACKEND`. Tests and the
benchmark reach both backends through `available_backends()`.
"""

import os

from . import pykernels

if os.environ.get("FRACLIFT_PURE_PYTHON", "0") == "1":
    impl = pykernels
else:
    try:
        from . import _ckernels as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pykernels

BACKEND = impl.BACKEND


def available_backends():
    """Mapping of backend name -> kernel module, for everything importable."""
    out = {"python": pykernels}
    try:
        from . import _ckernels

        out["c"] = _ckernels
    except ImportError:
        pass
    return out
