"""Build script: compiles the coset-table kernel when Cython is available.

The package is fully functional without the extension; knotcert.kernels
falls back to the pure-Python twin at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "knotcert._coset_c",
                ["src/knotcert/_coset_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
