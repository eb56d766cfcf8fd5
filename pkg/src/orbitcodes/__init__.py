"""Distance distributions of single-orbit cyclic subspace codes."""

__version__ = "0.1.0"
