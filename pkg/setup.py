"""Build script: compiles the optional integer-kernel extension.

The package is fully functional without the extension; the accelerated
cyclotomic contraction kernels fall back to numpy at import time.
"""

import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zmodular._accel._kernels",
                ["src/zmodular/_accel/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
