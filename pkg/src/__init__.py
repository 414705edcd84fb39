"""Fractional extensions of evolution equations by Mittag-Leffler subordination."""

__version__ = "0.1.0"
