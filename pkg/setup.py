"""Build script for the optional compiled kernel core.

The package works without the extension (a pure-Python fallback is
selected at import time); building it makes exhaustive sweeps much faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "arcconn._fastcore",
                ["src/arcconn/_fastcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
