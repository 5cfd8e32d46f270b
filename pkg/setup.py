"""Build script: compiles the sweep/search kernels when Cython and a C
compiler are available, otherwise installs with the pure backend only
(selected automatically at import time by ``stratres.kernels``)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/stratres/kernels/_speedups.pyx"],
        language_level=3,
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
