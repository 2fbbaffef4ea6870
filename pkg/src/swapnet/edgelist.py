"""Plain-text edge lists: a header ``n m`` followed by ``m`` lines ``u v`` with ``u < v``."""
from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import Graph


def parse_edgelist(text: str) -> Graph:
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, tok) for no, tok in lines if tok]
    if not lines:
        raise ParseError("empty input", line=1)
    head_no, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", line=head_no)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers", line=head_no) from None
    if n < 0 or m < 0:
        raise ParseError("negative count in header", line=head_no)

    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for no, tok in body:
        if len(tok) != 2:
            raise ParseError("edge line must be 'u v'", line=no)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line=no) from None
        if u == v:
            raise ParseError(f"self-loop at {u}", line=no)
        if not (0 <= u < v < n):
            raise ParseError(f"edge ({u}, {v}) violates 0 <= u < v < {n}", line=no)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", line=no)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def read_edgelist(path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(g: Graph, path) -> None:
    Path(path).write_text(format_edgelist(g))
