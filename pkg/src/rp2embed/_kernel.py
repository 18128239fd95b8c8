"""Pick the compiled kernel when it is importable, else the pure-Python one.

Set ``RP2EMBED_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from ._pykernel import LimitExceeded

if os.environ.get("RP2EMBED_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernel import IMPLEMENTATION, canonical_code, enumerate_embeddings, face_labels
else:
    try:
        from ._ckernel import IMPLEMENTATION, canonical_code, enumerate_embeddings, face_labels
    except ImportError:
        from ._pykernel import IMPLEMENTATION, canonical_code, enumerate_embeddings, face_labels

__all__ = ["IMPLEMENTATION", "LimitExceeded", "canonical_code", "enumerate_embeddings", "face_labels"]
