from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a C compiler) the
# package falls back to the pure-Python/numpy implementations at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("pwlinv._kernels._fast", ["src/pwlinv/_kernels/_fast.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
