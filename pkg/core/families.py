"""
Standard graph families used by tests, sweeps and the CLI examples
"""

from typing import Iterable

import networkx as nx

from .graph import Graph


class Families:
    """Named constructors; vertex numbering follows networkx generators"""

    @staticmethod
    def complete(n: int) -> Graph:
        return Graph.from_networkx(nx.complete_graph(n))

    @staticmethod
    def cycle(n: int) -> Graph:
        return Graph.from_networkx(nx.cycle_graph(n))

    @staticmethod
    def path(n: int) -> Graph:
        """Path on n vertices (n-1 edges)"""
        return Graph.from_networkx(nx.path_graph(n))

    @staticmethod
    def star(leaves: int) -> Graph:
        """K_{1,leaves}; vertex 0 is the center"""
        return Graph.from_networkx(nx.star_graph(leaves))

    @staticmethod
    def complete_bipartite(a: int, b: int) -> Graph:
        return Graph.from_networkx(nx.complete_bipartite_graph(a, b))

    @staticmethod
    def wheel(n: int) -> Graph:
        """Hub 0 joined to a cycle on n-1 vertices"""
        return Graph.from_networkx(nx.wheel_graph(n))

    @staticmethod
    def prism(k: int) -> Graph:
        """Circular ladder C_k x K_2"""
        return Graph.from_networkx(nx.circular_ladder_graph(k))

    @staticmethod
    def petersen() -> Graph:
        return Graph.from_networkx(nx.petersen_graph())

    @staticmethod
    def triangle_chain(k: int) -> Graph:
        """
        k triangles joined in a row by single bridging edges

        Planar and free of intersecting triangles for every k.
        """
        G = nx.Graph()
        for i in range(k):
            a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
            G.add_edges_from([(a, b), (b, c), (c, a)])
            if i:
                G.add_edge(3 * i - 1, a)
        return Graph.from_networkx(G)

    @staticmethod
    def pendant_attach(g: Graph, v: int, count: int = 1) -> Graph:
        """g with `count` new leaves hung on vertex v"""
        edges = list(g.edges) + [(v, g.n + i) for i in range(count)]
        return Graph(g.n + count, edges)

    @staticmethod
    def disjoint_union(graphs: Iterable[Graph]) -> Graph:
        offset = 0
        edges = []
        for g in graphs:
            edges.extend((u + offset, v + offset) for u, v in g.edges)
            offset += g.n
        return Graph(offset, edges)
