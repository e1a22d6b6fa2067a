"""Build the optional compiled kernel extension.

The package works without it (pure-Python fallback is selected at import),
so a missing compiler or Cython only costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "clawlab.kernels._ckern",
                sources=["src/clawlab/kernels/_ckern.pyx"],
            )
        ],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"clawlab: compiled kernels skipped ({exc}); using pure-Python fallback")
    extensions = []

setup(ext_modules=extensions)
