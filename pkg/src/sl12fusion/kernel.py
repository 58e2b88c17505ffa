"""Selects the integer echelon implementation at import time.

The compiled extension is used when it was built; setting the environment
variable ``SL12FUSION_PURE=1`` forces the pure-Python fallback.
"""

import os

COMPILED = False
if not os.environ.get("SL12FUSION_PURE"):
    try:
        from ._kernel import Echelon  # noqa: F401
        COMPILED = True
    except ImportError:
        pass
if not COMPILED:
    from ._kernel_py import Echelon  # noqa: F401

__all__ = ["Echelon", "COMPILED"]
