"""Build script: compiles the optional Cython stepping kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a missing compiler or Cython must not fail the
install.  Set GEOPHASE_REQUIRE_COMPILED=1 to turn a failed extension build
into a hard error instead.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext

REQUIRE_COMPILED = os.environ.get("GEOPHASE_REQUIRE_COMPILED", "") == "1"


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError as exc:
        if REQUIRE_COMPILED:
            raise
        print(f"geophase: skipping compiled kernel ({exc})", file=sys.stderr)
        return []
    ext = Extension(
        "geophase._kernels._fastkernel",
        ["src/geophase/_kernels/_fastkernel.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


class optional_build_ext(build_ext):
    """build_ext that degrades to the pure-Python backend on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            if REQUIRE_COMPILED:
                raise
            print(f"geophase: compiled kernel build failed, using numpy fallback ({exc})",
                  file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            if REQUIRE_COMPILED:
                raise
            print(f"geophase: building {ext.name} failed, using numpy fallback ({exc})",
                  file=sys.stderr)


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
