from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "sternbp._core",
    [
        "bindings/module.cpp",
        "src/bigint.cpp",
        "src/sequences.cpp",
        "src/descent.cpp",
        "src/oracle.cpp",
        "src/bfile.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
