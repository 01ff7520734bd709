"""
📐 Maximum average degree, exhaustively over vertex subsets

Induced subgraphs suffice: for a fixed vertex set, adding edges never lowers
the density. Edge counts of all 2^n subsets come from a vectorized doubling
recurrence; the winner is confirmed with exact fractions.
"""

import logging
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from config.config import Config
from core.errors import GraphError
from core.graph import Graph

logger = logging.getLogger(__name__)

_FLOAT_SLACK = 1e-9


def _subset_tables(g: Graph) -> Tuple[np.ndarray, np.ndarray]:
    """(edge count, vertex count) for every subset mask"""
    size = 1 << g.n
    edges = np.zeros(size, dtype=np.int32)
    verts = np.zeros(size, dtype=np.int32)
    for i in range(g.n):
        half = 1 << i
        low = np.arange(half, dtype=np.int64)
        added = np.zeros(half, dtype=np.int32)
        for j in g.neighbors(i):
            if j < i:
                added += ((low >> j) & 1).astype(np.int32)
        edges[half:2 * half] = edges[:half] + added
        verts[half:2 * half] = verts[:half] + 1
    return edges, verts


def mad_witness(g: Graph, max_n: Optional[int] = None) -> Tuple[Fraction, Tuple[int, ...]]:
    """
    mad(G) together with a densest vertex subset

    Raises:
        GraphError: empty graph, or more vertices than the exhaustive limit
    """
    limit = max_n if max_n is not None else Config.MAD_MAX_N
    if g.n == 0:
        raise GraphError("mad of the empty graph is undefined")
    if g.n > limit:
        raise GraphError(f"exhaustive mad is limited to n <= {limit}, got n={g.n}")

    edges, verts = _subset_tables(g)
    ratio = edges[1:] / verts[1:]
    best_float = ratio.max()
    near = np.nonzero(ratio >= best_float - _FLOAT_SLACK)[0] + 1

    best: Optional[Fraction] = None
    best_mask = 0
    for mask in near:
        density = Fraction(int(edges[mask]), int(verts[mask]))
        if best is None or density > best:
            best, best_mask = density, int(mask)

    members = tuple(v for v in range(g.n) if best_mask >> v & 1)
    return 2 * best, members


def max_average_degree(g: Graph) -> Fraction:
    """Exact mad(G) as a Fraction"""
    value, members = mad_witness(g)
    logger.debug(f"📐 mad = {value} attained on {members}")
    return value
