"""Build the optional Cython eigensolver kernels.

If Cython or a C compiler is unavailable the install still succeeds;
the package falls back to the numpy implementation at import time.
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "power_spectra._kernels",
                ["src/power_spectra/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
