"""Graph file formats: a plain edge list and graph6."""

from __future__ import annotations

import sys

import networkx as nx

from ..graph import Graph


class ParseError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph:
    """Line 1 is ``n m``; then ``m`` lines ``u v``. ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty input: expected a header line 'n m'")
    lineno, head = rows[0]
    n, m = _ints(head, lineno, "header")
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: n and m must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    seen = set()
    edges = []
    for lineno, fields in body:
        u, v = _ints(fields, lineno, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def _ints(fields, lineno, what):
    if len(fields) != 2:
        raise ParseError(f"line {lineno}: {what} line needs exactly two integers")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"line {lineno}: {what} line needs exactly two integers") from None


def render_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> list[Graph]:
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        try:
            h = nx.from_graph6_bytes(line.encode("ascii"))
        except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
            raise ParseError(f"line {lineno}: bad graph6 string: {exc}") from None
        graphs.append(Graph(h.number_of_nodes(), h.edges()))
    return graphs


def render_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode("ascii")


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def guess_format(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "graph6" if path.endswith((".g6", ".graph6")) else "edges"


def load_graph(path: str, fmt: str | None = None) -> Graph:
    """Read a single graph; graph6 files must hold exactly one line."""
    text = read_text(path)
    if guess_format(path, fmt) == "graph6":
        graphs = parse_graph6(text)
        if len(graphs) != 1:
            raise ParseError(f"expected one graph6 line, found {len(graphs)}")
        return graphs[0]
    return parse_edge_list(text)


def render(g: Graph, fmt: str = "edges") -> str:
    return render_graph6(g) if fmt == "graph6" else render_edge_list(g)
