"""Exact workbench for low-dimensional superbialgebras and Hopf superalgebras."""

__version__ = "0.1.0"
