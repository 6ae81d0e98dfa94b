"""Build script: compiles the table-kernel extension when Cython is available.

The extension is optional.  Set RESIDUA_PURE=1 (or build without Cython) to
skip it; the package then falls back to the pure-Python kernels at import.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("RESIDUA_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "residua._kernels",
                    ["src/residua/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
