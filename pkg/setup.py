"""Build the optional compiled kernel.

The package works without the extension (a pure-Python fallback is selected
at import time), so any failure to cythonize or compile is non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/qgl3/_kernels_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    import sys

    print(f"qgl3: skipping compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
