from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("jacobrush._census_cy", ["src/jacobrush/_census_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
else:
    # no Cython: install the pure-Python package, the census falls back at import
    ext_modules = []

setup(ext_modules=ext_modules)
