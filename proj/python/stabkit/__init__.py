"""Quiver mutation, Harder-Narasimhan filtrations, heart exchange graphs,
disc flips, and quadratic-differential periods.

Structured inputs and outputs are the same JSON documents the stabkit CLI
reads and writes; see the project README for the formats.
"""

try:
    from ._stabkit import *  # noqa: F401,F403
    from ._stabkit import __version__  # noqa: F401
except ImportError:  # running against a build tree on PYTHONPATH
    from _stabkit import *  # noqa: F401,F403
    from _stabkit import __version__  # noqa: F401
