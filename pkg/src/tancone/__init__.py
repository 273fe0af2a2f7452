"""Exact verification toolkit for tangent-cone ideals at fixed points of
Richardson varieties in the Lagrangian Grassmannian."""

__version__ = "0.1.0"
