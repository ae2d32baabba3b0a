"""Verification toolkit for 0-APN power maps x^d over GF(2^n)."""

__version__ = "0.1.0"
