"""Build hook for the optional compiled kernels.

The extension accelerates the polynomial sampling inner loops; when Cython
(or a compiler) is unavailable the install proceeds without it and the
package falls back to the pure-Python kernels at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/realsnf/_speedups.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
