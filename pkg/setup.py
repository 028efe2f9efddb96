"""Build script for the optional compiled gate kernels.

The package is pure Python plus one Cython extension. If the extension
cannot be built (no compiler, no Cython), installation still succeeds and
the numpy fallback kernels are used at runtime.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing toolchain
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        warnings.warn(
            f"compiled gate kernels were not built ({exc}); "
            "the numpy fallback will be used"
        )


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fastslow.kernels._gates_cy",
                ["src/fastslow/kernels/_gates_cy.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
