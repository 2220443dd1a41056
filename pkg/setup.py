"""Build script: compiles the optional fast-kernel extension.

The package is fully functional without the extension; ringua.kernels falls
back to the pure-Python implementations when the import fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("ringua._fastkernels", ["src/ringua/_fastkernels.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
