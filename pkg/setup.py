from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("appowers._accel", ["src/appowers/_accel.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install pure-Python only; kernels.py falls back at import.
    extensions = []

setup(ext_modules=extensions)
