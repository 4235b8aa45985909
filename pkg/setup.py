import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None and not os.environ.get("RAMSAT_NO_EXT"):
    extensions = cythonize(
        [
            Extension(
                "ramsat._cliquecore",
                ["src/ramsat/_cliquecore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=extensions)
