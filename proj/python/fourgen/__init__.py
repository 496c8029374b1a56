"""4-general sets in PG(n,q): constructions, verification, bounds and codes."""

try:
    from ._fourgen import *  # packaged layout
except ImportError:  # development layout: _fourgen.so on PYTHONPATH
    from _fourgen import *
