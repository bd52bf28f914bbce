"""Build script for the optional compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so the extension is marked optional: a failed compile must
not fail the install.
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "ris_ce.kernels._core",
                ["src/ris_ce/kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
