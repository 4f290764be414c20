"""Build script for the optional compiled Viterbi kernel.

The package works without the extension (a pure-numpy fallback is selected
at import time); building it just makes decoding/alignment much faster.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "polyasr._viterbi_cy",
                ["src/polyasr/_viterbi_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
