"""Build script.

The compiled kernel is an optional accelerator: if Cython (or a C
compiler) is unavailable the package installs anyway and falls back to
the pure-Python kernel at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/tancone/_kernel_c.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
