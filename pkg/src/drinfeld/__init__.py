"""Exact arithmetic for Drinfeld modules over finite fields and F_q(T)."""

from ._core import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
