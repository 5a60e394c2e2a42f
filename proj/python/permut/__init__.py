"""Finite universal-algebra n-permutability toolkit.

Thin package wrapper around the _permut extension module; see the extension's
docstrings for the operation surface.
"""

try:
    from ._permut import *  # noqa: F401,F403  (installed layout)
    from ._permut import __doc__ as _doc
except ImportError:
    from _permut import *  # noqa: F401,F403  (flat build-tree layout)
    from _permut import __doc__ as _doc

__doc__ = _doc or __doc__
