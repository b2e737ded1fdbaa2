"""Build script for the optional compiled search kernel.

The package is pure Python except for xtrees._fastmatch, a Cython version of
the order-preserving embedding search in xtrees._match_py. If Cython (or a C
compiler) is unavailable the extension is simply skipped and the package falls
back to the pure implementation at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("xtrees._fastmatch", ["src/xtrees/_fastmatch.pyx"])],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
