"""Builders for the worked examples shipped with the package.

Each builder returns fresh objects; the bundled data files in ``data/`` are
generated from these and checked against them in the test suite.
"""

from __future__ import annotations

import itertools
import random
from typing import Dict, List, Sequence, Tuple

from .graphs import Graph, disjoint_facet_graph, star_graph
from .groebner import Ideal
from .polycore import RingCtx, parse_poly


def _minors_2x2(ctx: RingCtx, top: Sequence[str], bottom: Sequence[str]) -> Ideal:
    gens = []
    for i, j in itertools.combinations(range(len(top)), 2):
        gens.append(f"{top[i]}*{bottom[j]} - {top[j]}*{bottom[i]}")
    return Ideal.parse(ctx, gens)


def minors_2x3() -> Ideal:
    """2-minors of ``[[x1, a, b], [x2, b, c]]`` as the three listed generators."""
    ctx = RingCtx(("x1", "x2", "a", "b", "c"))
    return Ideal.parse(ctx, ["-x2*a + x1*b", "-x2*b + x1*c", "-b^2 + a*c"])


MINORS_2X3_SEQUENCE = ["x1", "x2", "a", "c", "b"]
MINORS_2X3_CHAIN = ["x1", "x2", "a", "b", "c", "y1", "y2", "y3"]
# the y3 term of the first binomial must carry x1 to lie in the kernel
MINORS_2X3_KERNEL = ["-b*y1 + a*y2 - x1*y3", "c*y1 - b*y2 + x2*y3"]
MINORS_2X3_INITIALS = [["c*y1", "b*y1", "b^2*y2"]] * 4 + [["b*y1", "b*y2"]]


def symmetric_minors() -> Ideal:
    """2-minors of the generic symmetric 3x3 matrix in ``a..f``."""
    ctx = RingCtx(tuple("abcdef"))
    M = [["a", "b", "c"], ["b", "d", "e"], ["c", "e", "f"]]
    gens = []
    for r in itertools.combinations(range(3), 2):
        for c in itertools.combinations(range(3), 2):
            g = parse_poly(f"{M[r[0]][c[0]]}*{M[r[1]][c[1]]} - {M[r[0]][c[1]]}*{M[r[1]][c[0]]}", ctx)
            if g and g not in gens and -g not in gens:
                gens.append(g)
    return Ideal(ctx, gens)


SYMMETRIC_SEQUENCE = ["a", "b", "e", "d+f", "c", "f"]


def scroll(n: int) -> Ideal:
    """2-minors of the 2 x (n+1) matrix with columns (x,y), (a_k, a_{k+1})."""
    if n < 1:
        raise ValueError("n must be positive")
    names = ("x", "y") + tuple(f"a{k}" for k in range(1, n + 2))
    ctx = RingCtx(names)
    top = ["x"] + [f"a{k}" for k in range(1, n + 1)]
    bottom = ["y"] + [f"a{k}" for k in range(2, n + 2)]
    return _minors_2x2(ctx, top, bottom)


def scroll_sequence(n: int) -> List[str]:
    return ["x", "y", "a1", f"a{n + 1}"] + [f"a{k}" for k in range(n, 1, -1)]


def path_of_length(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(i, i + 1) for i in range(1, k + 1)])


PATH3_COVER = ["x1*x3", "x2*x3", "x2*x4"]
PATH3_SEQUENCE = ["x1", "x3", "x2+x4", "x2"]
PATH4_COVER = ["x1*x3*x4", "x1*x3*x5", "x2*x4", "x2*x3*x5"]
PATH4_SEQUENCE = ["x1", "x3", "x5", "x2+x4", "x2"]

TRIANGLE_STAR_ATTACH = {4: {1, 2}, 5: {2, 3}, 6: {1, 3}}
TRIANGLE_STAR_SEQUENCE = ["x4", "x5", "x6", "x1+x2+x3", "2*x1+3*x2+5*x3", "7*x1+11*x2+13*x3"]


def triangle_star(star_names: bool = False) -> Graph:
    """Star graph on ``G_3`` with pendants 4, 5, 6.

    With ``star_names`` the pendants are called ``t1, t2, t3``; otherwise
    every vertex ``k`` is ``x_k``.
    """
    G = star_graph(3, TRIANGLE_STAR_ATTACH)
    return G if star_names else Graph(G.n, G.edges)


SEVEN_VERTEX_EDGES = [(1, 2), (2, 3), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7),
                      (4, 5), (5, 6), (6, 7)]
SEVEN_VERTEX_COVER = ["x1*x3*x5*x6", "x2*x3*x4*x5*x6", "x1*x2*x4*x6*x7", "x1*x2*x3*x4*x6",
                      "x2*x3*x4*x5*x7", "x1*x2*x3*x5*x7", "x1*x2*x5*x6*x7", "x2*x4*x5*x6*x7"]
# seeds for the generic trials of the seven-vertex graph
SEVEN_VERTEX_SEED = 0


def seven_vertex_graph() -> Graph:
    """Chordal, mixed, not a star graph: two rows of triangles."""
    return Graph.from_edges(7, SEVEN_VERTEX_EDGES)


CM_CHORDAL_SPECS: List[Tuple[Tuple[int, ...], Tuple[Tuple[int, int], ...]]] = [
    ((3, 2), ((3, 4),)),
    ((2, 2), ((1, 3),)),
    ((3, 3), ((1, 4),)),
    ((2, 2, 2), ((1, 3), (3, 5))),
    ((4, 2, 2), ((1, 5), (2, 7))),
]


def cm_chordal_graphs() -> List[Graph]:
    """Graphs whose vertex set is the disjoint union of the facets with a free vertex."""
    return [disjoint_facet_graph(s, l) for s, l in CM_CHORDAL_SPECS]


def random_cm_chordal(rng: random.Random, max_n: int = 8, min_blocks: int = 2) -> Graph:
    """Random disjoint-facet graph: cliques joined along a random tree by single edges.

    Links join the first vertices of two cliques, so every clique keeps a
    free vertex and non-free vertices come first.
    """
    while True:
        s = rng.randint(min_blocks, max(min_blocks, max_n // 2))
        sizes = [rng.randint(2, 3) for _ in range(s)]
        if sum(sizes) <= max_n:
            break
    starts = list(itertools.accumulate([1] + sizes[:-1]))
    links = [(starts[rng.randrange(q)], starts[q]) for q in range(1, s)]
    return disjoint_facet_graph(sizes, links)


def data_files() -> Dict[str, str]:
    """File name -> content for the bundled data directory."""
    from .fileio import format_graph, format_ideal
    from .graphs import cover_ideal
    out = {
        "example-1-9.ideal": format_ideal(minors_2x3()),
        "symmetric-3x3.ideal": format_ideal(symmetric_minors()),
        "example-2-1a.graph": format_graph(path_of_length(3)),
        "example-2-1b.graph": format_graph(path_of_length(4)),
        "example-2-2.graph": format_graph(triangle_star()),
        "example-2-2-star.graph": format_graph(triangle_star(star_names=True)),
        "example-2-4.graph": format_graph(seven_vertex_graph()),
    }
    for name, G in [("example-2-1a", path_of_length(3)), ("example-2-1b", path_of_length(4)),
                    ("example-2-2", triangle_star()), ("example-2-4", seven_vertex_graph())]:
        out[f"{name}-cover.ideal"] = format_ideal(cover_ideal(G).to_ideal())
    for n in (2, 3, 4, 5, 6):
        out[f"scroll-{n}.ideal"] = format_ideal(scroll(n))
    for k, G in enumerate(cm_chordal_graphs(), start=1):
        out[f"cm-chordal-{k}.graph"] = format_graph(G)
    return out
