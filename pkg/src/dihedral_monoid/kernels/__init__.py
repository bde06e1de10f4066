"""Hot loops with a compiled backend and a pure-Python fallback.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
functions from ``_pure`` are exported under the same names. ``use()``
switches backends at runtime (benchmarks and the cross-check tests use it).
"""

from __future__ import annotations

from types import ModuleType

from . import _pure

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_NAMES = ("class_labels", "count_roots", "normal_forms", "all_normal_forms")

BACKENDS: dict[str, ModuleType] = {"python": _pure}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

BACKEND = ""


def use(name: str) -> None:
    """Select the backend ("cython" or "python") for this process."""
    global BACKEND
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    mod = BACKENDS[name]
    g = globals()
    for attr in _NAMES:
        g[attr] = getattr(mod, attr)
    BACKEND = name


use("cython" if "cython" in BACKENDS else "python")
