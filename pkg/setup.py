"""Build script for the compiled generation-loop kernels.

The package works without the extension (a pure-Python engine is selected at
import time), but the compiled kernels make full-budget runs ~2 orders of
magnitude faster.  Build with ``pip install -e . --no-build-isolation``.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "f4m.algorithm._kernels",
        ["src/f4m/algorithm/_kernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        # no -ffast-math: the python/compiled engines must agree bit-for-bit
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
