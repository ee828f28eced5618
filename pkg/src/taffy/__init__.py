"""Topological analysis of taffy pullers and other rod-stirring devices."""

from .braids import BraidWord, IntPolynomial, burau_minus_one, char_poly, largest_root, permutation
from .devices import RodMotionSpec, catalog, compile_braid, device
from .dynnikov import LoopCoords, entropy
from .errors import TaffyError
from .torus import TorusMap, make_map

__all__ = [
    "BraidWord",
    "IntPolynomial",
    "LoopCoords",
    "RodMotionSpec",
    "TaffyError",
    "TorusMap",
    "burau_minus_one",
    "catalog",
    "char_poly",
    "compile_braid",
    "device",
    "entropy",
    "largest_root",
    "make_map",
    "permutation",
]

__version__ = "0.1.0"
