"""Build script: compiles the GMP-backed Sturm kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time); the compiled core is what makes the large tangent-polynomial
scans fast.  Set TWOFIB_PURE=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TWOFIB_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "twofib.algebra._sturmcore",
            ["src/twofib/algebra/_sturmcore.pyx"],
            libraries=["gmp"],
        )
        ext_modules = cythonize([ext], language_level=3)
        for e in ext_modules:
            e.optional = True

setup(ext_modules=ext_modules)
