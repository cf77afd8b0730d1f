"""Text formats for graphs (DIMACS ``p edge``) and colourings.

Both formats number vertices from 1 on disk and from 0 in memory.
"""
from __future__ import annotations

from typing import Iterable

from .coloring import Coloring
from .errors import ParseError
from .graph import Graph


def write_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    edges = list(G.edges())
    lines.append(f"p edge {G.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def read_graph(text: str) -> Graph:
    """Parse ``p edge n m`` followed by ``m`` lines ``e u v``; ``c`` lines are comments."""
    n = m = None
    adj: list[int] = []
    seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("malformed header, expected 'p edge <n> <m>'", lineno)
            n, m = _int(parts[2], lineno), _int(parts[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative size in header", lineno)
            adj = [0] * n
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ParseError("malformed edge line, expected 'e <u> <v>'", lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            if n is None:
                raise ParseError("edge line before the 'p edge' header", lineno)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex {w} outside 1..{n}", lineno)
            u, v = u - 1, v - 1
            if adj[u] >> v & 1:
                raise ParseError(f"duplicate edge {u + 1} {v + 1}", lineno)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            seen += 1
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    if seen != m:
        raise ParseError(f"header announces {m} edges, found {seen}")
    return Graph(n, adj, check=False)


def write_coloring(c: Coloring) -> str:
    lines = [f"colors {len(c)} {c.palette}"]
    lines.extend(f"{v + 1} {col}" for v, col in enumerate(c.colors))
    return "\n".join(lines) + "\n"


def read_coloring(text: str) -> Coloring:
    """Parse ``colors <n> <palette>`` followed by ``<vertex> <color>`` lines."""
    n = palette = None
    labels: list[int | None] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "colors":
            if n is not None or len(parts) != 3:
                raise ParseError("malformed header, expected 'colors <n> <palette>'", lineno)
            n, palette = _int(parts[1], lineno), _int(parts[2], lineno)
            labels = [None] * n
            continue
        if n is None:
            raise ParseError("assignment before the 'colors' header", lineno)
        if len(parts) != 2:
            raise ParseError("expected '<vertex> <color>'", lineno)
        v, col = _int(parts[0], lineno), _int(parts[1], lineno)
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} outside 1..{n}", lineno)
        if not 0 <= col < palette:
            raise ParseError(f"colour {col} outside 0..{palette - 1}", lineno)
        if labels[v - 1] is not None:
            raise ParseError(f"vertex {v} coloured twice", lineno)
        labels[v - 1] = col
    if n is None:
        raise ParseError("missing 'colors' header")
    missing = [i + 1 for i, c in enumerate(labels) if c is None]
    if missing:
        raise ParseError(f"no colour for vertices {missing[:5]}")
    if len(set(labels)) != palette:
        raise ParseError(f"header palette {palette} but {len(set(labels))} colours used")
    return Coloring(labels)  # type: ignore[arg-type]
