"""Build script: compiles the optional search kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
install falls back to the pure-Python kernel selected at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernel ({exc}); "
                  "falling back to pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "falling back to pure-Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "wdrd._kernel",
        ["src/wdrd/_kernel.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
