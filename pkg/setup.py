"""Build script for the compiled enumeration kernel.

The package works without the extension (a pure-Python kernel with the
same API is selected at import time), so a missing Cython toolchain only
costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("chemgraph._ckernel", ["src/chemgraph/_ckernel.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
