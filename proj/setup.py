"""Builds the compiled core for the python package.

The CMake build remains the primary path for the library, CLI, and test
suites; this file only compiles the `frogbounds._core` extension so that
`pip install -e .` works with the stock setuptools backend.
"""

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "frogbounds._core",
    sources=[
        "src/analytic.cpp",
        "src/phi.cpp",
        "src/quartic.cpp",
        "src/bounds.cpp",
        "src/sim.cpp",
        "src/records.cpp",
        "src/verify.cpp",
        "bindings/module.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
