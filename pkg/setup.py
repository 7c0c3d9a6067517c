"""Build script: compiles the mod-p kernel extension when a C toolchain and
Cython are available, and falls back to a pure-Python install otherwise.
The package selects the implementation at import time, so a failed compile
only costs speed, never correctness."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "locrep._kernel._speedups",
                sources=["src/locrep/_kernel/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    import sys

    print(f"kernel extension skipped ({exc}); installing pure fallback", file=sys.stderr)

setup(ext_modules=ext_modules)
