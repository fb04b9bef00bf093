"""Build the optional Cython search kernel.

The package works without the extension (a pure-Python kernel with identical
semantics is selected at import time), so a missing Cython toolchain or a
failed compile degrades gracefully instead of breaking the install.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "twistspin._searchkernel",
                ["src/twistspin/_searchkernel.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
