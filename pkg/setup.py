"""Build the optional compiled enumeration kernel.

If Cython or a compiler is missing the package still installs and falls back
to the numpy implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "coxsupport.coxeter._kernels",
                ["src/coxsupport/coxeter/_kernels.pyx"],
                include_dirs=[np.get_include()],
                language="c++",
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
