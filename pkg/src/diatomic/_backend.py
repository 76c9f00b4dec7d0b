"""Select the kernel implementation at import time.

The compiled extension is preferred when present; set DIATOMIC_PURE_PYTHON=1
to force the fallback (used by the benchmark and for debugging).
"""

import os

if os.environ.get("DIATOMIC_PURE_PYTHON"):
    from . import _pykernels as kernels

    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as kernels

        BACKEND = "python"

stern_pair = kernels.stern_pair
continuant_pair = kernels.continuant_pair
word_matrix = kernels.word_matrix
matrix_word = kernels.matrix_word
