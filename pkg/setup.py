"""Build script: compiles the truncated-multiplication kernel when Cython is
available.  The package is fully functional without the extension (a pure
Python kernel is selected at import time), so a failed compilation is not
fatal for source installs."""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fsing._ptrunc",
                ["src/fsing/_ptrunc.pyx"],
                language="c++",
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
