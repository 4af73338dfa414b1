"""Build script: compiles the kernel extension when a toolchain allows.

A failed extension build is downgraded to a warning; the package then
runs on the pure-Python kernels selected at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the ringline kernel extension failed ({exc}); "
            "the pure-Python kernels will be used instead.",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "ringline.kernels._native", ["src/ringline/kernels/_native.pyx"]
    )
    return cythonize(
        [ext], compiler_directives={"language_level": "3"}, quiet=True
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
