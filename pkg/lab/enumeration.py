"""
🗂️ Small-graph enumeration up to isomorphism

n <= 7 comes straight from the networkx graph atlas (one representative per
isomorphism class, ordered by edge count then degree sequence). n = 8 is
built by giving each 7-vertex graph a new vertex joined to every neighbor
subset; every 8-vertex graph minus its last vertex is a 7-vertex graph, and
for connected targets a non-cut vertex always exists, so the extension is
complete. Candidates are bucketed by (m, degree sequence, WL hash) and
confirmed with nx.is_isomorphic.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Tuple

import networkx as nx
from tqdm import tqdm

from config.config import Config
from config.schema import GraphClass
from core.errors import EnumerationCapError
from core.graph import Graph

from .predicates import (
    has_intersecting_triangles,
    is_delta4_non_regular,
    is_subcubic_non_regular,
    mad_below_four,
    no_adjacent_conditions,
    three_plus_independent,
)

logger = logging.getLogger(__name__)

ATLAS_MAX_N = 7


def _three_plus_class(g: Graph) -> bool:
    return g.max_degree() >= 3 and bool(three_plus_independent(g))


CLASS_FILTERS: Dict[GraphClass, Callable[[Graph], bool]] = {
    GraphClass.MAD4: lambda g: bool(mad_below_four(g)),
    GraphClass.SUBCUBIC: lambda g: bool(is_subcubic_non_regular(g)),
    GraphClass.DELTA4: lambda g: bool(is_delta4_non_regular(g)),
    GraphClass.THREE_PLUS_INDEPENDENT: _three_plus_class,
    GraphClass.NO_ADJACENT: lambda g: bool(no_adjacent_conditions(g)),
    GraphClass.NO_INTERSECT: lambda g: not has_intersecting_triangles(g),
    GraphClass.ALL: lambda g: True,
}


def in_class(g: Graph, graph_class: GraphClass) -> bool:
    """Membership test used by enumeration and corpus hunts"""
    return CLASS_FILTERS[GraphClass(graph_class)](g)


def _atlas_by_order() -> Dict[int, List[nx.Graph]]:
    by_n: Dict[int, List[nx.Graph]] = {}
    for G in nx.graph_atlas_g():
        by_n.setdefault(G.number_of_nodes(), []).append(G)
    return by_n


def _fingerprint(G: nx.Graph) -> Tuple:
    degrees = tuple(sorted((d for _, d in G.degree()), reverse=True))
    return G.number_of_edges(), degrees, nx.weisfeiler_lehman_graph_hash(G)


def _extend_to_eight(seeds: List[nx.Graph], connected_only: bool, progress: bool) -> List[nx.Graph]:
    buckets: Dict[Tuple, List[nx.Graph]] = {}
    found: List[nx.Graph] = []
    smallest = 1 if connected_only else 0
    for G in tqdm(seeds, desc="extending n=7", disable=not progress, leave=False):
        for size in range(smallest, 8):
            for subset in combinations(range(7), size):
                H = G.copy()
                H.add_node(7)
                H.add_edges_from((7, u) for u in subset)
                if connected_only and not nx.is_connected(H):
                    continue
                key = _fingerprint(H)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(H, rep) for rep in bucket):
                    continue
                bucket.append(H)
                found.append(H)

    found.sort(key=lambda H: (
        H.number_of_edges(),
        tuple(sorted((d for _, d in H.degree()), reverse=True)),
        nx.to_graph6_bytes(H, header=False),
    ))
    return found


def enumerate_graphs(
    n_max: int,
    graph_class: GraphClass = GraphClass.ALL,
    connected_only: bool = True,
    n_min: int = 1,
    allow_large: bool = False,
    progress: bool = False,
) -> Iterator[Graph]:
    """
    Every graph with n_min..n_max vertices, one per isomorphism class

    Args:
        n_max: Largest vertex count
        graph_class: Class filter applied to each representative
        connected_only: Skip disconnected graphs
        n_min: Smallest vertex count
        allow_large: Permit n_max above AECL_ENUM_MAX_N
        progress: Show a tqdm bar while building n = 8

    Raises:
        EnumerationCapError: n_max above the cap, or above 8 (no generator
            exists past the atlas extension)
    """
    if n_max > Config.ENUM_MAX_N and not allow_large:
        raise EnumerationCapError(
            f"n_max={n_max} exceeds the enumeration cap {Config.ENUM_MAX_N}; pass allow_large to override"
        )
    if n_max > ATLAS_MAX_N + 1:
        raise EnumerationCapError(f"enumeration stops at n={ATLAS_MAX_N + 1}, got n_max={n_max}")

    keep = CLASS_FILTERS[GraphClass(graph_class)]
    atlas = _atlas_by_order()
    emitted = 0
    for n in range(max(1, n_min), n_max + 1):
        if n <= ATLAS_MAX_N:
            layer = atlas.get(n, [])
            if connected_only:
                layer = [G for G in layer if nx.is_connected(G)]
        else:
            seeds = atlas[ATLAS_MAX_N]
            if connected_only:
                seeds = [G for G in seeds if nx.is_connected(G)]
            logger.info(f"🗂️ Building n={n} from {len(seeds)} seed graphs")
            layer = _extend_to_eight(seeds, connected_only, progress)

        for G in layer:
            g = Graph.from_networkx(G)
            if keep(g):
                emitted += 1
                yield g
    logger.debug(f"🗂️ Enumerated {emitted} graph(s) up to n={n_max}, class={GraphClass(graph_class).value}")


def count_graphs(n: int, connected_only: bool = True, graph_class: GraphClass = GraphClass.ALL) -> int:
    """Number of isomorphism classes on exactly n vertices"""
    return sum(1 for _ in enumerate_graphs(n, graph_class, connected_only, n_min=n))

