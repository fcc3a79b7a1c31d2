"""Build the guplab._core extension by delegating to the CMake project.

CMake configures and compiles the C++ core plus the pybind11 module; this
shim only tells it where setuptools expects the finished extension.  Requires
a cmake binary on PATH (>= 3.20).
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        extdir = (Path.cwd() / self.get_ext_fullpath(ext.name)).parent.resolve()
        cmake_args = [
            f"-DGUPLAB_EXT_OUTPUT_DIR={extdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DGUPLAB_PYTHON=ON",
            "-DGUPLAB_TESTS=OFF",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "-j"], cwd=build_temp, check=True
        )


setup(
    ext_modules=[CMakeExtension("guplab._core")],
    cmdclass={"build_ext": CMakeBuild},
)
