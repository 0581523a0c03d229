"""Build script: compiles the optional matching-enumeration kernel.

The extension is best-effort.  If Cython or a C compiler is unavailable the
package installs pure-Python only and `hexchar.matchings` falls back to the
equivalent interpreter implementation at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HEXCHAR_PURE", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hexchar/_matchcore.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
