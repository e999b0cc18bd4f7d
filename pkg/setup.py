"""Build script for the optional compiled sweep kernel.

The package is pure Python plus one Cython extension (qinv._sweepcore) that
accelerates the Temperley-Lieb sweep inner loop.  If the extension cannot be
built (no compiler, no Cython), installation falls back to the pure-Python
kernel in qinv._sweep_py; everything still works, just slower.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building qinv._sweepcore failed ({exc}); "
            "falling back to the pure-Python sweep kernel",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; skipping compiled sweep kernel",
              file=sys.stderr)
        return []
    return cythonize(
        [Extension("qinv._sweepcore", ["src/qinv/_sweepcore.pyx"])],
        language_level=3,
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
