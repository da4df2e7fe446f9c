from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install without the compiled kernel; the package falls
    # back to the pure-Python implementation at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("transcriptkit._edit_align", ["src/transcriptkit/_edit_align.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
