"""Build script for the optional compiled bitset kernel.

The package is pure Python by default; building the extension only makes the
hot popcount loops faster.  Build it in place with

    python setup.py build_ext --inplace

If Cython is installed the extension is compiled from ``_kernel.pyx``,
otherwise from the checked-in ``_kernel.c``.  When neither route works the
package still installs and falls back to the pure-Python kernel at import.
"""

import os

from setuptools import Extension, setup

PYX = os.path.join("src", "abmod", "_kernel.pyx")
C = os.path.join("src", "abmod", "_kernel.c")

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("abmod._kernel", [PYX], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    if os.path.exists(C):
        ext_modules = [Extension("abmod._kernel", [C], extra_compile_args=["-O3"])]

setup(ext_modules=ext_modules)
