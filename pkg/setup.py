"""Build hook for the optional compiled LR kernel.

The package works without it: ``polymology.schur`` falls back to the
pure-Python kernel when the extension is missing.  Set POLY_NO_EXT=1 to skip
the build entirely; a failed compile only prints a warning.
"""
import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"warning: compiled LR kernel not built ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: compiled LR kernel not built ({exc})", file=sys.stderr)


ext_modules = []
if not os.environ.get("POLY_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("polymology._lrkernel", ["src/polymology/_lrkernel.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:
        print(f"warning: skipping compiled LR kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
