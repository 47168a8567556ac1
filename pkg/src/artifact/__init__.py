"""Exact combinatorics for type A-infinity cluster seeds and their truncations."""

from artifact.kernels import BACKEND
from artifact.lattice import Weight, alpha_w, eps_w, lambda_w, pair
from artifact.multiseg import Multisegment, RevSegment, Segment, w_label
from artifact.word import coord, coord_inv, jp

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Weight", "alpha_w", "eps_w", "lambda_w", "pair",
    "Multisegment", "RevSegment", "Segment", "w_label", "coord", "coord_inv", "jp",
    "__version__",
]
