import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("REGRANGE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "regrange._kernels_c",
                    ["src/regrange/_kernels_c.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
