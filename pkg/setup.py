from setuptools import setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        "src/quivsheaf/linalg/_kernels_c.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python kernels are selected at import time when the
    # extension is unavailable.
    extensions = []

setup(ext_modules=extensions)
