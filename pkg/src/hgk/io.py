"""Readers and writers for ``.hgr`` representations, ``.gr`` graphs and parts files.

Writers sort every id so equal objects serialize to identical bytes.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError, ValidationError
from .graph import SimpleGraph, sorted_vertices, vertex_key
from .model import HRepresentation, MultiGraph, Subdivision, format_node, sorted_nodes


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_node(token: str, sub: Subdivision | None = None, line: int | None = None):
    if token.startswith("e:"):
        parts = token.split(":")
        if len(parts) != 3:
            raise ParseError(f"bad subdivision node {token!r}", line)
        try:
            pos = int(parts[2])
        except ValueError:
            raise ParseError(f"bad position in {token!r}", line) from None
        return (parts[1], pos)
    return token


def loads_hgr(text: str, path: str | None = None) -> HRepresentation:
    nodes: list = []
    edges: list = []
    counts: dict = {}
    vertex_lines: list = []
    for lineno, tok in _tokens(text):
        kind = tok[0]
        if kind == "hgraph":
            if len(tok) != 2:
                raise ParseError("expected 'hgraph <name>'", lineno, path)
            continue
        elif kind == "node":
            if len(tok) != 2:
                raise ParseError("expected 'node <id>'", lineno, path)
            nodes.append(tok[1])
        elif kind == "edge":
            if len(tok) != 5:
                raise ParseError("expected 'edge <edge-id> <u> <v> <sub_count>'", lineno, path)
            try:
                c = int(tok[4])
            except ValueError:
                raise ParseError(f"sub_count {tok[4]!r} is not an integer", lineno, path) from None
            if c < 0:
                raise ParseError("negative sub_count", lineno, path)
            edges.append((tok[1], tok[2], tok[3]))
            counts[tok[1]] = c
        elif kind == "vertex":
            if len(tok) < 3:
                raise ParseError("expected 'vertex <vertex-id> <node> ...'", lineno, path)
            vertex_lines.append((lineno, tok[1], tok[2:]))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno, path)
    try:
        sub = Subdivision(MultiGraph(tuple(nodes), tuple(edges)), counts)
    except ValidationError as exc:
        raise ParseError(str(exc), None, path) from None
    models = {}
    for lineno, vid, toks in vertex_lines:
        if vid in models:
            raise ParseError(f"duplicate vertex {vid!r}", lineno, path)
        model = set()
        for t in toks:
            node = parse_node(t, sub, lineno)
            if node not in sub:
                raise ParseError(f"vertex {vid!r}: unknown node {t!r}", lineno, path)
            model.add(node)
        models[vid] = model
    rep = HRepresentation(sub, models)
    bad = rep.violations()
    if bad:
        raise ParseError(bad[0], None, path)
    return rep


def dumps_hgr(rep: HRepresentation, name: str = "G") -> str:
    lines = [f"hgraph {name}"]
    base = rep.base
    for v in sorted(base.nodes):
        lines.append(f"node {v}")
    for eid, a, b in sorted(base.edges):
        lines.append(f"edge {eid} {a} {b} {rep.subdivision.sub_count[eid]}")
    for v in rep.vertices:
        nodes = " ".join(format_node(x) for x in sorted_nodes(rep.models[v]))
        lines.append(f"vertex {v} {nodes}")
    return "\n".join(lines) + "\n"


def loads_gr(text: str, path: str | None = None) -> SimpleGraph:
    """``p <n> <m>`` then ``e <u> <v>``; vertices are 1..n unless ``c name <i> <id>`` renames them."""
    n = m = None
    names: dict = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "c":
            if len(tok) == 4 and tok[1] == "name":
                try:
                    names[int(tok[2])] = tok[3]
                except ValueError:
                    raise ParseError("bad name line", lineno, path) from None
            continue
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno, path)
            if len(tok) == 4:
                tok = [tok[0]] + tok[2:]  # tolerate 'p tw n m'
            if len(tok) != 3:
                raise ParseError("expected 'p <n> <m>'", lineno, path)
            try:
                n, m = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError("non-integer in problem line", lineno, path) from None
        elif tok[0] == "e":
            body = tok[1:]
            if n is None:
                raise ParseError("edge before problem line", lineno, path)
            if len(body) != 2:
                raise ParseError("expected 'e <u> <v>'", lineno, path)
            try:
                u, v = int(body[0]), int(body[1])
            except ValueError:
                raise ParseError("non-integer vertex", lineno, path) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno, path)
            if u == v:
                raise ParseError("self-loop", lineno, path)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno, path)
    if n is None:
        raise ParseError("missing problem line", None, path)
    if len(edges) != m:
        raise ParseError(f"declared {m} edges, found {len(edges)}", None, path)

    def label(i):
        return names.get(i, i)

    return SimpleGraph([label(i) for i in range(1, n + 1)], [(label(u), label(v)) for u, v in edges])


def dumps_gr(g: SimpleGraph) -> str:
    idx = {v: i + 1 for i, v in enumerate(g.vertices)}
    lines = [f"p {g.n} {g.m}"]
    for v, i in idx.items():
        if not (isinstance(v, int) and v == i):
            lines.append(f"c name {i} {v}")
    for u, v in g.edges():
        a, b = sorted((idx[u], idx[v]))
        lines.append(f"e {a} {b}")
    return "\n".join(lines) + "\n"


def loads_parts(text: str, g: SimpleGraph | None = None, path: str | None = None) -> list:
    """``part <i> <v> ...`` lines; returns parts ordered by index."""
    parts: dict = {}
    by_name = {str(v): v for v in g.vertices} if g is not None else None
    for lineno, tok in _tokens(text):
        if tok[0] != "part" or len(tok) < 2:
            raise ParseError("expected 'part <i> <v> ...'", lineno, path)
        try:
            i = int(tok[1])
        except ValueError:
            raise ParseError("part index must be an integer", lineno, path) from None
        if i in parts:
            raise ParseError(f"duplicate part {i}", lineno, path)
        members = []
        for t in tok[2:]:
            if by_name is not None:
                if t not in by_name:
                    raise ParseError(f"unknown vertex {t!r}", lineno, path)
                members.append(by_name[t])
            else:
                members.append(t)
        parts[i] = members
    return [parts[i] for i in sorted(parts)]


def dumps_parts(parts: list) -> str:
    return "".join(
        f"part {i} " + " ".join(str(v) for v in sorted_vertices(p)) + "\n" for i, p in enumerate(parts, start=1)
    )


def read_hgr(path) -> HRepresentation:
    return loads_hgr(Path(path).read_text(), str(path))


def write_hgr(rep: HRepresentation, path, name: str = "G") -> None:
    Path(path).write_text(dumps_hgr(rep, name))


def read_gr(path) -> SimpleGraph:
    return loads_gr(Path(path).read_text(), str(path))


def write_gr(g: SimpleGraph, path) -> None:
    Path(path).write_text(dumps_gr(g))


def read_graph_or_rep(path):
    """Dispatch on suffix; returns an HRepresentation for ``.hgr`` and a SimpleGraph otherwise."""
    p = Path(path)
    if p.suffix == ".hgr":
        return read_hgr(p)
    return read_gr(p)


__all__ = [
    "loads_hgr",
    "dumps_hgr",
    "loads_gr",
    "dumps_gr",
    "loads_parts",
    "dumps_parts",
    "read_hgr",
    "write_hgr",
    "read_gr",
    "write_gr",
    "read_graph_or_rep",
    "parse_node",
    "vertex_key",
]
