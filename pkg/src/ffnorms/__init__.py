"""Exact local/global norm counting over rational function fields."""

from .fields import GF, Fq

__all__ = ["GF", "Fq"]
