"""Polarizations of powers of the graded maximal ideal, and the cellular
resolutions behind them."""

__version__ = "0.1.0"
