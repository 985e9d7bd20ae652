import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Builds the pybind11 module through the project's CMakeLists."""

    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_temp = Path(self.build_temp).resolve()
        build_temp.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_temp),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DSUCFIX_BUILD_PYTHON=ON",
                "-DSUCFIX_BUILD_TOOLING=OFF",
                f"-DPython_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "_core"],
            check=True,
        )

        staged = sorted((build_temp / "python" / "sucfix").glob("_core*"))
        if not staged:
            raise RuntimeError("cmake did not produce the _core extension")
        destination = Path(self.get_ext_fullpath(ext.name)).resolve()
        destination.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(staged[0]), str(destination))


setup(
    ext_modules=[CMakeExtension("sucfix._core")],
    cmdclass={"build_ext": CMakeBuild},
)
