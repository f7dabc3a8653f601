"""Text formats for ideals and graphs.

Ideal files::

    # comment
    ring x1 x2 a b c [| y1 y2 y3] [; char=p]
    -x2*a + x1*b
    ...

Graph files::

    vertices 5
    edge 1 2
    edge 2 3
    base 3          # optional: star graph based on G_3, pendants named t1..tm
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

from .graphs import Graph, GraphError, is_star_graph
from .groebner import Ideal
from .polycore import ParseError, RingCtx, parse_poly

PathLike = Union[str, Path]


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_ring_line(line: str) -> RingCtx:
    body = line.strip()
    if not body.startswith("ring"):
        raise ParseError("first line must start with 'ring'")
    body = body[4:]
    char = 0
    if ";" in body:
        body, opts = body.split(";", 1)
        for opt in opts.split(","):
            key, _, val = opt.partition("=")
            if key.strip() != "char":
                raise ParseError(f"unknown ring option {key.strip()!r}")
            try:
                char = int(val)
            except ValueError:
                raise ParseError(f"bad characteristic {val.strip()!r}") from None
    xs, bar, ys = body.partition("|")
    xnames, ynames = xs.split(), ys.split()
    if not xnames:
        raise ParseError("ring line declares no variables")
    try:
        return RingCtx(tuple(xnames + ynames), len(xnames), char)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_ideal_text(text: str) -> Ideal:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty ideal file")
    ctx = parse_ring_line(lines[0][1])
    gens = []
    for no, line in lines[1:]:
        try:
            g = parse_poly(line, ctx)
        except ParseError as exc:
            raise ParseError(f"line {no}: {exc}") from None
        if g:
            gens.append(g)
    return Ideal(ctx, gens)


def format_ideal(I: Ideal) -> str:
    ctx = I.ctx
    xs = " ".join(ctx.var_names[: ctx.x_count])
    ys = " ".join(ctx.var_names[ctx.x_count:])
    head = f"ring {xs}" + (f" | {ys}" if ys else "") + (f" ; char={ctx.char}" if ctx.char else "")
    return "\n".join([head] + [str(g) for g in I.gens]) + "\n"


def read_ideal(path: PathLike) -> Ideal:
    return parse_ideal_text(Path(path).read_text(encoding="utf-8"))


def write_ideal(I: Ideal, path: PathLike) -> None:
    Path(path).write_text(format_ideal(I), encoding="utf-8")


_INT = re.compile(r"^[0-9]+$")


def parse_graph_text(text: str) -> Graph:
    n: Optional[int] = None
    base: Optional[int] = None
    edges = []
    for no, line in _content_lines(text):
        parts = line.split()
        key, args = parts[0], parts[1:]
        if not all(_INT.match(a) for a in args):
            raise ParseError(f"line {no}: expected integers after {key!r}")
        vals = [int(a) for a in args]
        if key == "vertices" and len(vals) == 1:
            if n is not None:
                raise ParseError(f"line {no}: vertex count given twice")
            n = vals[0]
        elif key == "edge" and len(vals) == 2:
            edges.append(tuple(vals))
        elif key == "base" and len(vals) == 1:
            base = vals[0]
        else:
            raise ParseError(f"line {no}: cannot parse {line!r}")
    if n is None:
        raise ParseError("missing 'vertices n' line")
    try:
        seen = set()
        for e in edges:
            k = (min(e), max(e))
            if k in seen:
                raise GraphError(f"multiple edge {e}")
            seen.add(k)
        if base is None:
            return Graph.from_edges(n, edges)
        names = tuple(f"x{i}" for i in range(1, base + 1)) + \
            tuple(f"t{k}" for k in range(1, n - base + 1))
        G = Graph.from_edges(n, edges, names=names, base_size=base)
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    if not is_star_graph(G):
        raise ParseError(f"'base {base}' given but the graph is not a star graph on G_{base}")
    return G


def format_graph(G: Graph) -> str:
    lines = [f"vertices {G.n}"]
    if G.base_size is not None:
        lines.append(f"base {G.base_size}")
    lines += [f"edge {i} {j}" for i, j in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    return parse_graph_text(Path(path).read_text(encoding="utf-8"))


def write_graph(G: Graph, path: PathLike) -> None:
    Path(path).write_text(format_graph(G), encoding="utf-8")


def sniff_kind(text: str) -> str:
    """``"graph"`` or ``"ideal"`` from the first content line."""
    for _, line in _content_lines(text):
        return "ideal" if line.startswith("ring") else "graph"
    raise ParseError("empty input file")


def parse_sequence(text: str, ctx: RingCtx) -> List:
    """Semicolon-separated linear forms."""
    parts = [p.strip() for p in text.split(";")]
    if not all(parts):
        raise ParseError("empty entry in sequence")
    return [parse_poly(p, ctx) for p in parts]
