from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("segreml._kernel_cy", ["src/segreml/_kernel_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The compiled kernel is optional; the pure-Python twin is always available.
    ext_modules = []

setup(ext_modules=ext_modules)
