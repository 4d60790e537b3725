"""Oscillation and positive bidiagonal factorization of banded Hessenberg matrices."""

try:
    from pbf._pbf import analyze, convergents, factorize, transform
except ImportError:  # pragma: no cover - build-tree layout
    from _pbf import analyze, convergents, factorize, transform

__all__ = ["analyze", "convergents", "factorize", "transform"]
