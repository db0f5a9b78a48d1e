"""Exact computation of weighted Dynkin diagrams of nilpotent orbits matching
Satake diagrams of real simple Lie algebras, with span verification."""

__version__ = "0.1.0"
