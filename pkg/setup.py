import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NILSPEC_NO_EXTENSION") != "1":
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "nilspec._ckernels",
                    ["src/nilspec/_ckernels.pyx"],
                    include_dirs=[numpy.get_include()],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython toolchain: the portable backend is selected at import.
        ext_modules = []

setup(ext_modules=ext_modules)
