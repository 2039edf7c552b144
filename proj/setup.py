import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        extdir = ext_fullpath.parent.resolve()
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DFOCKCAS_PYTHON=ON",
            "-DFOCKCAS_TESTS=OFF",
        ]
        subprocess.run(
            ["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "fockcas_python", "-j"],
            cwd=build_temp,
            check=True,
        )

        extdir.mkdir(parents=True, exist_ok=True)
        built = build_temp / "python" / "fockcas"
        for item in built.iterdir():
            (extdir / item.name).write_bytes(item.read_bytes())


setup(
    ext_modules=[CMakeExtension("fockcas._core")],
    cmdclass={"build_ext": CMakeBuild},
)
