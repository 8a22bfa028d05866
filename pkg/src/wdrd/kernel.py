"""Search-kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback.  Set WDRD_PURE=1 to force the fallback (used by the parity tests
and the benchmark).
"""

import os

if os.environ.get("WDRD_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
search_run = _impl.search_run


def backends():
    """All importable kernel backends, name -> search_run."""
    from . import _kernel_py

    found = {"pure": _kernel_py.search_run}
    try:
        from . import _kernel  # type: ignore[attr-defined]

        found["compiled"] = _kernel.search_run
    except ImportError:
        pass
    return found
