import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

# No -ffast-math: the compiled kernels must be bit-identical to the numpy
# fallback (same addition order, IEEE semantics).
extensions = [
    Extension(
        "binboost._kernels._core",
        ["src/binboost/_kernels/_core.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
