"""Optional Cython build of the feasibility kernel.

Without Cython (or a compiler) the package installs pure-Python and
``qoab.kernel`` falls back to ``qoab._kernel_py``.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("qoab._kernel", ["src/qoab/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
