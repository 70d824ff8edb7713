import os

from setuptools import setup

ext_modules = []
if not os.environ.get("PANAUTH_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "panauth.crypto._kernels",
                    ["src/panauth/crypto/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython: the package still works on the pure-Python backend.
        ext_modules = []

setup(ext_modules=ext_modules)
