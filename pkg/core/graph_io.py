"""
📄 Graph file formats: edge-list text and graph6

Edge-list: one edge per line as two decimal vertex ids, `#` starts a comment,
vertex count is max id + 1 unless a `# n <count>` header comment says more.
graph6: the standard printable encoding, delegated to networkx after a
character scan that reports the offending byte offset.

Line numbers are 1-based, offsets are 0-based.
"""

import logging
import re
from enum import Enum
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

import networkx as nx

from .errors import DuplicateEdgeError, GraphParseError, SelfLoopError
from .graph import Graph

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")
_DECIMAL = re.compile(r"[0-9]+")
_N_HEADER = re.compile(r"\s*n\s+([0-9]+)\s*$")
_G6_HEADER = b">>graph6<<"


class GraphFormat(str, Enum):
    EDGE_LIST = "edge-list"
    GRAPH6 = "graph6"


def _as_text(data: Union[bytes, str]) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise GraphParseError("input is not UTF-8 text", offset=e.start) from None


def _as_bytes(data: Union[bytes, str]) -> bytes:
    if isinstance(data, bytes):
        return data
    try:
        return data.encode("ascii")
    except UnicodeEncodeError as e:
        raise GraphParseError("invalid graph6 character", offset=e.start) from None


# ==================== EDGE LIST ====================

def parse_edge_list(data: Union[bytes, str]) -> Graph:
    text = _as_text(data)
    edges: List[Tuple[int, int]] = []
    first_seen: Dict[Tuple[int, int], int] = {}
    max_id = -1
    declared_n: Optional[int] = None
    declared_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, hash_mark, comment = raw.partition("#")
        if hash_mark:
            header = _N_HEADER.match(comment)
            if header:
                declared_n = int(header.group(1))
                declared_line = lineno

        tokens = list(_TOKEN.finditer(body))
        if not tokens:
            continue
        if len(tokens) != 2:
            offset = tokens[2].start() if len(tokens) > 2 else len(body.rstrip())
            raise GraphParseError(
                f"expected two vertex ids, found {len(tokens)} field(s)", line=lineno, offset=offset
            )
        ids = []
        for tok in tokens:
            if not _DECIMAL.fullmatch(tok.group()):
                raise GraphParseError(
                    f"vertex id must be a non-negative decimal, got {tok.group()!r}",
                    line=lineno,
                    offset=tok.start(),
                )
            ids.append(int(tok.group()))
        u, v = ids
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", line=lineno, offset=tokens[0].start())
        key = (u, v) if u < v else (v, u)
        if key in first_seen:
            raise DuplicateEdgeError(
                f"duplicate edge {u}-{v} (first listed on line {first_seen[key]})",
                line=lineno,
                offset=tokens[0].start(),
            )
        first_seen[key] = lineno
        edges.append((u, v))
        max_id = max(max_id, u, v)

    n = max_id + 1
    if declared_n is not None:
        if declared_n < n:
            raise GraphParseError(
                f"header declares n={declared_n} but vertex id {max_id} is used",
                line=declared_line,
            )
        n = declared_n
    return Graph(n, edges)


def write_edge_list(g: Graph) -> bytes:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return ("\n".join(lines) + "\n").encode("ascii")


# ==================== GRAPH6 ====================

def parse_graph6(data: Union[bytes, str]) -> Graph:
    raw = _as_bytes(data).strip()
    base = 0
    if raw.startswith(_G6_HEADER):
        raw = raw[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not raw:
        raise GraphParseError("empty graph6 string", offset=base)
    for i, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"invalid graph6 character {chr(byte)!r}", offset=base + i)
    try:
        G = nx.from_graph6_bytes(raw)
    except (nx.NetworkXError, ValueError) as e:
        raise GraphParseError(f"malformed graph6: {e}", offset=base) from None
    # edge ids follow the graph6 bit order: column-major upper triangle
    edges = sorted(((min(a, b), max(a, b)) for a, b in G.edges()), key=lambda e: (e[1], e[0]))
    return Graph(G.number_of_nodes(), edges)


def write_graph6(g: Graph) -> bytes:
    return nx.to_graph6_bytes(g.to_networkx(), header=False)


def iter_graph6(data: Union[bytes, str]) -> Iterator[Graph]:
    """Graphs from a graph6 corpus, one per line"""
    for lineno, line in enumerate(_as_bytes(data).splitlines(), start=1):
        line = line.strip()
        if not line or line == _G6_HEADER:
            continue
        try:
            yield parse_graph6(line)
        except GraphParseError as e:
            raise GraphParseError(e.reason, line=lineno, offset=e.offset) from None


# ==================== DISPATCH ====================

def parse_graph(data: Union[bytes, str], fmt: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> Graph:
    """
    Parse a graph in the given format

    Raises:
        GraphParseError: malformed input (SelfLoopError / DuplicateEdgeError
            for those two cases), carrying line and/or offset
    """
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.GRAPH6:
        return parse_graph6(data)
    return parse_edge_list(data)


def write_graph(g: Graph, fmt: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> bytes:
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.GRAPH6:
        return write_graph6(g)
    return write_edge_list(g)


def detect_format(path: Union[str, Path]) -> GraphFormat:
    suffix = Path(path).suffix.lower()
    return GraphFormat.GRAPH6 if suffix in (".g6", ".graph6") else GraphFormat.EDGE_LIST


def read_graph(path: Union[str, Path], fmt: Optional[Union[GraphFormat, str]] = None) -> Graph:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Graph file not found: {path}")
    fmt = GraphFormat(fmt) if fmt else detect_format(path)
    logger.debug(f"📄 Reading {fmt.value} graph from {path}")
    return parse_graph(path.read_bytes(), fmt)
