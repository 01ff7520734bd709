"""
Vertex classes used by the discharging rules

A 3-vertex is special when it has a neighbor of degree exactly
kappa - Delta + 2, normal otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List

from core.graph import Graph


class VertexKind(str, Enum):
    LOW = "1-minus"
    TWO = "two-vertex"
    SPECIAL_THREE = "special-3"
    NORMAL_THREE = "normal-3"
    FOUR = "four"
    FIVE = "five"
    SIX_PLUS = "six-plus"


@dataclass(frozen=True)
class VertexClass:
    vertex: int
    degree: int
    kind: VertexKind


def special_degree(g: Graph, kappa: int) -> int:
    return kappa - g.max_degree() + 2


def is_special_three(g: Graph, kappa: int, v: int) -> bool:
    if g.degree(v) != 3:
        return False
    target = special_degree(g, kappa)
    return any(g.degree(w) == target for w in g.neighbors(v))


def classify_vertices(g: Graph, kappa: int) -> List[VertexClass]:
    """One VertexClass per vertex, in vertex order"""
    classes = []
    for v in g.vertices():
        d = g.degree(v)
        if d <= 1:
            kind = VertexKind.LOW
        elif d == 2:
            kind = VertexKind.TWO
        elif d == 3:
            kind = VertexKind.SPECIAL_THREE if is_special_three(g, kappa, v) else VertexKind.NORMAL_THREE
        elif d == 4:
            kind = VertexKind.FOUR
        elif d == 5:
            kind = VertexKind.FIVE
        else:
            kind = VertexKind.SIX_PLUS
        classes.append(VertexClass(v, d, kind))
    return classes
