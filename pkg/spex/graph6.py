# graph6.py
# Purpose: graph6 (short form, n <= 62) encode/decode on top of networkx, plus one-graph-per-line file helpers.

from __future__ import annotations
from pathlib import Path
from typing import Iterable, List, Union

import networkx as nx

from spex.errors import FormatError
from spex.graph import MAX_VERTICES, Graph, from_edge_list

HEADER = ">>graph6<<"


def strip_header(text: str) -> str:
    """Remove an optional '>>graph6<<' header and surrounding whitespace."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def to_graph6(g: Graph) -> str:
    """Encode g as a graph6 string (no header, no newline)."""
    if g.n > MAX_VERTICES:
        raise FormatError(f"graph6 short form holds at most {MAX_VERTICES} vertices, got {g.n}")
    return nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string. An optional '>>graph6<<' header and surrounding whitespace are ignored."""
    s = strip_header(text)
    if not s:
        raise FormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} at offset {pos} outside 63..126")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise FormatError("long-form graph6 (n > 62) is not supported")
    if n < 1:
        raise FormatError("graph6 string encodes the empty graph")
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise FormatError(f"malformed graph6 {s!r}: {e}") from None
    return from_edge_list(n, [(int(u), int(v)) for u, v in h.edges()])


# ---- Files ----
def read_graph6_file(path: Union[str, Path]) -> List[Graph]:
    """One graph per non-blank line."""
    with Path(path).open("r", encoding="ascii") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def write_graph6_file(path: Union[str, Path], graphs: Iterable[Graph]) -> int:
    count = 0
    with Path(path).open("w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count
