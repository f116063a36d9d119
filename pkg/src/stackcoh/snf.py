"""Backend selection for the Smith normal form kernel.

Prefers the compiled extension (built from _snfcore.pyx) and falls back to
the pure Python implementation.  Set STACKCOH_FORCE_PY_SNF=1 to force the
fallback (used by the benchmark).
"""

import os

if os.environ.get("STACKCOH_FORCE_PY_SNF"):
    from .snf_python import smith_normal_form

    BACKEND = "python"
else:
    try:
        from ._snfcore import smith_normal_form  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from .snf_python import smith_normal_form  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["smith_normal_form", "BACKEND"]
