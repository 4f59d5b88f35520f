"""Build script: compiles the optional counting kernel if Cython is available.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed extension build is not fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/permutoria/_speedups.pyx",
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
