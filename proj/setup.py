from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The wheel compiles the library sources straight into the extension; the
# CMake tree stays the build for the CLI and the test suites.
ext = Pybind11Extension(
    "symsearch._core",
    sources=[
        "src/search.cpp",
        "src/symmetry.cpp",
        "src/domains.cpp",
        "src/explicit_io.cpp",
        "src/agent.cpp",
        "python/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
