"""Enumerate projective-plane embeddings of small graphs and decide embedding properties."""
from __future__ import annotations

from ._kernel import IMPLEMENTATION as KERNEL
from .graph import Cycle, Graph, parse_graph
from .rp2 import Rp2Embedding, enumerate_rp2_embeddings
from .scheme import EmbeddingScheme, Surface, enumerate_schemes

__version__ = "0.1.0"

__all__ = [
    "KERNEL",
    "Cycle",
    "EmbeddingScheme",
    "Graph",
    "Rp2Embedding",
    "Surface",
    "enumerate_rp2_embeddings",
    "enumerate_schemes",
    "parse_graph",
]
