import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or with WEYLCSM_NO_EXT=1)
# the package installs pure Python and selects the fallback at import.
ext_modules = []
if not os.environ.get("WEYLCSM_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("weylcsm._ckernels", ["src/weylcsm/_ckernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
