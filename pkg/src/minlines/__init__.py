"""Minimal rational curves on Schubert varieties and their resolutions."""

from .rootsys import RootSystem, build_root_system, parse_type
from .weyl import WeylElement, from_word, parse_word

__version__ = "0.1.0"

__all__ = ["RootSystem", "build_root_system", "parse_type",
           "WeylElement", "from_word", "parse_word"]
