"""Build script.

The enumeration kernel has an optional Cython implementation.  If Cython
(and a C compiler) are available the extension is built; otherwise the
install still succeeds and the package uses the pure-Python kernel.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "liespec.lattices._enum_core",
                ["src/liespec/lattices/_enum_core.pyx"],
            )
        ],
        language_level="3",
    )
    for ext in ext_modules:
        ext.optional = True

setup(ext_modules=ext_modules)
