"""Build the optional Cython kernels.  Without Cython (or a compiler) the
package still installs and runs on the pure-Python kernels."""

from setuptools import setup
from setuptools.command.build_ext import build_ext

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("wlpositroid._ckernels", ["src/wlpositroid/_ckernels.pyx"])],
        compiler_directives={"language_level": 3},
        quiet=True,
    )
except Exception as exc:  # Cython missing
    print(f"wlpositroid: building without compiled kernels ({exc})")


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"wlpositroid: compiled kernels skipped ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"wlpositroid: compiled kernels skipped ({exc})")


setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
