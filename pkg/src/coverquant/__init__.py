"""Exact computations for quantum covering groups of anisotropic super Cartan data."""

__version__ = "0.1.0"
