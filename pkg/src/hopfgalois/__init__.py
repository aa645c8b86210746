"""Exact verification toolkit for Hopf algebras, Hopf-Galois extensions
and the gauge groupoid structures attached to them."""

from .field import Field, Scalar, field

__all__ = ["Field", "Scalar", "field"]
