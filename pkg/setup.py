"""Build script: compiles the optional scalar-kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time); set FRACLIFT_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FRACLIFT_NO_EXT", "0") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fraclift._kernels._ckernels",
                    sources=["src/fraclift/_kernels/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={
                "language_level": "3",
                "cdivision": True,
                "boundscheck": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
