"""
Version information for the acyclic edge coloring lab
"""

__version__ = "1.0.0"
__version_info__ = tuple(map(int, __version__.split(".")))

RELEASE_DATE = "2026-10-19"
TOOL_NAME = "aecl"
