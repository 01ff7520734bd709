"""
Coloring file format

    k <kappa>
    u v c        one line per edge, c = 0 for uncolored

Lines may appear in any order on input; output is ordered by edge id.
"""

import re
from typing import Dict, Union

from .coloring import UNCOLORED, EdgeColoring
from .errors import ColoringParseError
from .graph import Graph

_HEADER = re.compile(r"k\s+([0-9]+)")
_ROW = re.compile(r"([0-9]+)\s+([0-9]+)\s+([0-9]+)")


def parse_coloring(data: Union[bytes, str], g: Graph) -> EdgeColoring:
    """
    Read a coloring of g

    Raises:
        ColoringParseError: bad header or row, edge absent from g, edge listed
            twice, color outside 0..kappa
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError:
            raise ColoringParseError("coloring file is not UTF-8 text") from None

    kappa = None
    colors = [UNCOLORED] * g.m
    listed: Dict[int, int] = {}

    for lineno, raw in enumerate(data.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if kappa is None:
            header = _HEADER.fullmatch(body)
            if not header or int(header.group(1)) < 1:
                raise ColoringParseError("expected header 'k <kappa>' with kappa >= 1", line=lineno)
            kappa = int(header.group(1))
            continue

        row = _ROW.fullmatch(body)
        if not row:
            raise ColoringParseError("expected 'u v c' with decimal fields", line=lineno)
        u, v, col = (int(x) for x in row.groups())
        if u >= g.n or v >= g.n or u == v or not g.has_edge(u, v):
            raise ColoringParseError(f"edge {u}-{v} is not in the graph", line=lineno)
        e = g.edge_id(u, v)
        if e in listed:
            raise ColoringParseError(
                f"edge {u}-{v} listed twice (first on line {listed[e]})", line=lineno
            )
        if col > kappa:
            raise ColoringParseError(f"color {col} outside 0..{kappa}", line=lineno)
        listed[e] = lineno
        colors[e] = col

    if kappa is None:
        raise ColoringParseError("missing header 'k <kappa>'")
    return EdgeColoring(kappa, colors)


def write_coloring(c: EdgeColoring, g: Graph) -> bytes:
    lines = [f"k {c.kappa}"]
    lines.extend(f"{u} {v} {c.color(e)}" for e, (u, v) in enumerate(g.edges))
    return ("\n".join(lines) + "\n").encode("ascii")
