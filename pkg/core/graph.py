"""
🕸️ Immutable simple graph with stable vertex and edge ids

Vertices are 0..n-1, edges are 0..m-1 in insertion order. Subgraph operations
never mutate; they return a new graph together with tables mapping child ids
back to parent ids.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .errors import DuplicateEdgeError, GraphError, NotApplicableError, SelfLoopError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class GraphClassLabel:
    """Recomputable class flags for a graph"""
    n: int
    m: int
    connected: bool
    subcubic: bool
    max_degree: int
    min_degree: int
    regular_degree: Optional[int]
    predicates: Dict[str, bool] = field(default_factory=dict)

    @property
    def regular(self) -> bool:
        return self.regular_degree is not None


class Subgraph(NamedTuple):
    """A derived graph plus child-id -> parent-id tables"""
    graph: "Graph"
    vertex_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]


class Graph:
    """
    Simple undirected graph

    adjacency[v] lists (neighbor, edge id) pairs in edge-id order, so every
    edge appears exactly twice across all lists.
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")

        normalized: List[Edge] = []
        index: Dict[Edge, int] = {}
        adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(n)]

        for raw in edges:
            if len(raw) != 2:
                raise GraphError(f"edge must have two endpoints, got {tuple(raw)}")
            u, v = int(raw[0]), int(raw[1])
            for x in (u, v):
                if not 0 <= x < n:
                    raise GraphError(f"vertex {x} out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise DuplicateEdgeError(f"duplicate edge {u}-{v}")
            eid = len(normalized)
            index[key] = eid
            normalized.append((u, v))
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))

        self._n = n
        self._edges: Tuple[Edge, ...] = tuple(normalized)
        self._adjacency = tuple(tuple(a) for a in adjacency)
        self._index = index

    # ==================== CONSTRUCTION ====================

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, edges)

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        """Build from a networkx graph; nodes are numbered in G.nodes() order"""
        if G.is_directed() or G.is_multigraph():
            raise GraphError("only simple undirected graphs are supported")
        position = {node: i for i, node in enumerate(G.nodes())}
        return cls(len(position), ((position[a], position[b]) for a, b in G.edges()))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self._n))
        for eid, (u, v) in enumerate(self._edges):
            G.add_edge(u, v, eid=eid)
        return G

    # ==================== BASIC QUERIES ====================

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        return self._adjacency

    def vertices(self) -> range:
        return range(self._n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < len(self._edges):
            raise GraphError(f"edge {e} out of range for m={len(self._edges)}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self._adjacency)

    def max_degree(self) -> int:
        if self._n == 0:
            raise GraphError("max degree of the empty graph is undefined")
        return max(self.degrees())

    def min_degree(self) -> int:
        if self._n == 0:
            raise GraphError("min degree of the empty graph is undefined")
        return min(self.degrees())

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return tuple(w for w, _ in self._adjacency[v])

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return tuple(e for _, e in self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._index

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def other_end(self, e: int, v: int) -> int:
        self._check_edge(e)
        a, b = self._edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def adjacent_edges(self, e: int) -> Tuple[int, ...]:
        """Edges sharing an endpoint with e (e excluded)"""
        self._check_edge(e)
        u, v = self._edges[e]
        return tuple(f for _, f in self._adjacency[u] + self._adjacency[v] if f != e)

    # ==================== DERIVED GRAPHS ====================

    def delete_edge(self, e: int) -> Subgraph:
        self._check_edge(e)
        kept = [i for i in range(len(self._edges)) if i != e]
        child = Graph(self._n, (self._edges[i] for i in kept))
        return Subgraph(child, tuple(range(self._n)), tuple(kept))

    def delete_vertex(self, v: int) -> Subgraph:
        self._check_vertex(v)
        return self.induced_subgraph(w for w in range(self._n) if w != v)

    def induced_subgraph(self, vertices: Iterable[int]) -> Subgraph:
        chosen = sorted(set(vertices))
        for v in chosen:
            self._check_vertex(v)
        position = {v: i for i, v in enumerate(chosen)}
        kept = [i for i, (a, b) in enumerate(self._edges) if a in position and b in position]
        child = Graph(
            len(chosen),
            ((position[self._edges[i][0]], position[self._edges[i][1]]) for i in kept),
        )
        return Subgraph(child, tuple(chosen), tuple(kept))

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with uv appended as edge id m"""
        return Graph(self._n, self._edges + ((u, v),))

    # ==================== CONNECTIVITY ====================

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y, _ in self._adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self._n

    def is_two_connected(self) -> bool:
        """
        Connected and free of cut vertices

        Raises:
            NotApplicableError: fewer than three vertices
        """
        if self._n < 3:
            raise NotApplicableError(f"2-connectivity needs n >= 3, got n={self._n}")
        return nx.is_biconnected(self.to_networkx())

    def cut_vertices(self) -> List[int]:
        return sorted(nx.articulation_points(self.to_networkx()))

    # ==================== CLASS FLAGS ====================

    def regular_degree(self) -> Optional[int]:
        if self._n == 0:
            return None
        degs = self.degrees()
        return degs[0] if min(degs) == max(degs) else None

    def class_label(self, predicates: Optional[Dict[str, bool]] = None) -> GraphClassLabel:
        if self._n == 0:
            raise GraphError("class label of the empty graph is undefined")
        delta = self.max_degree()
        return GraphClassLabel(
            n=self._n,
            m=self.m,
            connected=self.is_connected(),
            subcubic=delta <= 3,
            max_degree=delta,
            min_degree=self.min_degree(),
            regular_degree=self.regular_degree(),
            predicates=dict(predicates or {}),
        )

    # ==================== DUNDER ====================

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    def __getstate__(self):
        return (self._n, self._edges)

    def __setstate__(self, state):
        n, edges = state
        fresh = Graph(n, edges)
        for slot in Graph.__slots__:
            object.__setattr__(self, slot, getattr(fresh, slot))
