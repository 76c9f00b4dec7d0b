"""Build the optional compiled kernel extension.

The package works without it (a pure-Python kernel module is selected at
import time), so a failed extension build must not fail the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("diatomic._ckernels", ["src/diatomic/_ckernels.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
