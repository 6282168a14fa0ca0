"""Transition calculus for K-Stanley symmetric functions of classical type."""

__version__ = "0.1.0"
