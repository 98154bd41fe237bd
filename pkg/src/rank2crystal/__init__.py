"""Exact crystal combinatorics for rank-2 hyperbolic Kac-Moody algebras."""
from .algebra import CartanData, ShapeKind, ShapeWeight, Weight, WeightError, classify_weight
from .lspath import LSPath, PathError
from .polyhedral import CrystalError, TensorElement

__all__ = ["CartanData", "ShapeKind", "ShapeWeight", "Weight", "WeightError",
           "classify_weight", "LSPath", "PathError", "CrystalError", "TensorElement"]
