"""Select the compiled kernels when available, otherwise the pure-Python twins.

``BACKEND`` reports which implementation is active ("compiled" or "pure").
Both produce bit-identical results; the choice only affects speed.
"""

from __future__ import annotations

try:
    from ._speedups import batch_eval_signs, eval_sign_int, sign_variations

    BACKEND = "compiled"
except ImportError:  # extension not built; exact behaviour is unchanged
    from ._pure import batch_eval_signs, eval_sign_int, sign_variations

    BACKEND = "pure"

__all__ = ["BACKEND", "batch_eval_signs", "eval_sign_int", "sign_variations"]
