"""Finite simple graphs, chordality, clique complexes and vertex cover ideals.

Vertices are ``1..n``.  Ordinary graphs use the variables ``x1..xn``; a star
graph based on the complete graph ``G_n`` names its base vertices ``x1..xn``
and its pendant vertices ``t1..tm``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .monomial import MonomialIdeal
from .polycore import RingCtx

MAX_COVER_VERTICES = 24


class GraphError(ValueError):
    """Invalid graph input or a violated precondition."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Tuple[int, int]]
    names: Tuple[str, ...] = ()
    base_size: Optional[int] = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge {e} outside vertex set 1..{self.n}")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))
        names = tuple(self.names) or tuple(f"x{i}" for i in range(1, self.n + 1))
        if len(names) != self.n:
            raise GraphError("need one variable name per vertex")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], **kw) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges), **kw)

    @cached_property
    def adj(self) -> Dict[int, FrozenSet[int]]:
        nb: Dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return {v: frozenset(s) for v, s in nb.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def ring(self, char: int = 0) -> RingCtx:
        return RingCtx(self.names, char=char)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {1}
        todo = [1]
        while todo:
            v = todo.pop()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return len(seen) == self.n

    def induced(self, verts: Iterable[int]) -> "Graph":
        vs = sorted(set(verts))
        rel = {v: k + 1 for k, v in enumerate(vs)}
        return Graph(len(vs), frozenset((rel[i], rel[j]) for i, j in self.edges
                                        if i in rel and j in rel))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def _unit(n: int, verts: Iterable[int]) -> Tuple[int, ...]:
    e = [0] * n
    for v in verts:
        e[v - 1] = 1
    return tuple(e)


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.ring(), (_unit(G.n, e) for e in G.sorted_edges()))


def is_vertex_cover(G: Graph, C: Iterable[int]) -> bool:
    C = set(C)
    return all(i in C or j in C for i, j in G.edges)


def minimal_vertex_covers(G: Graph) -> List[FrozenSet[int]]:
    """All inclusion-minimal vertex covers, sorted by size then vertices."""
    if G.n > MAX_COVER_VERTICES:
        raise GraphError(f"minimal cover enumeration is limited to {MAX_COVER_VERTICES} vertices")
    edges = G.sorted_edges()
    adj = G.adj
    found = set()

    def rec(inc: frozenset, exc: frozenset):
        for i, j in edges:
            if i not in inc and j not in inc:
                break
        else:
            found.add(inc)
            return
        if i not in exc:
            rec(inc | {i}, exc)
        # leave i out: all its neighbours are forced in
        forced = adj[i] - inc
        if not forced & (exc | {i}):
            rec(inc | forced, exc | {i})

    rec(frozenset(), frozenset())
    minimal = [C for C in found if all(adj[v] - C for v in C)]
    return sorted(set(minimal), key=lambda C: (len(C), sorted(C)))


def cover_ideal(G: Graph) -> MonomialIdeal:
    """Intersection of the primes ``(x_i, x_j)`` over the edges."""
    ctx = G.ring()
    I = MonomialIdeal(ctx, [(0,) * G.n])
    for e in G.sorted_edges():
        I = I.intersect(MonomialIdeal(ctx, [_unit(G.n, [e[0]]), _unit(G.n, [e[1]])]))
    return I


def is_unmixed(G: Graph) -> bool:
    return len({len(C) for C in minimal_vertex_covers(G)}) <= 1


def lex_bfs(G: Graph) -> List[int]:
    """Lexicographic breadth-first search by partition refinement."""
    parts: List[List[int]] = [list(G.vertices)]
    order: List[int] = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        nb = G.adj[v]
        refined = []
        for P in parts:
            inside = [u for u in P if u in nb]
            outside = [u for u in P if u not in nb]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        parts = refined
    return order


def is_perfect_elimination_ordering(G: Graph, peo: Sequence[int]) -> bool:
    pos = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [u for u in G.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if any(w != u and w not in G.adj[u] for w in later):
            return False
    return True


def chordless_cycle(G: Graph) -> Optional[Tuple[int, ...]]:
    """A chordless cycle of length at least 4, or None if ``G`` is chordal."""
    for v in G.vertices:
        nb = sorted(G.adj[v])
        for p, a in enumerate(nb):
            for b in nb[p + 1:]:
                if G.has_edge(a, b):
                    continue
                allowed = (set(G.vertices) - G.adj[v] - {v}) | {a, b}
                prev = {a: None}
                q = deque([a])
                while q and b not in prev:
                    x = q.popleft()
                    for y in sorted(G.adj[x]):
                        if y in allowed and y not in prev:
                            prev[y] = x
                            q.append(y)
                if b in prev:
                    path = []
                    x = b
                    while x is not None:
                        path.append(x)
                        x = prev[x]
                    return (v,) + tuple(reversed(path))
    return None


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    peo: Tuple[int, ...] = ()
    cycle: Tuple[int, ...] = ()

    def __bool__(self):
        return self.chordal


def is_chordal(G: Graph) -> ChordalityResult:
    """Lex-BFS recognition; returns a perfect elimination ordering or a
    chordless cycle certificate."""
    peo = tuple(reversed(lex_bfs(G)))
    if is_perfect_elimination_ordering(G, peo):
        return ChordalityResult(True, peo=peo)
    cyc = chordless_cycle(G)
    if cyc is None:
        raise AssertionError("Lex-BFS rejected a graph without a chordless cycle")
    return ChordalityResult(False, cycle=cyc)


@dataclass(frozen=True)
class CliqueComplex:
    facets: Tuple[FrozenSet[int], ...]
    free_vertices: Tuple[FrozenSet[int], ...] = field(default=())

    def facets_with_free_vertex(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(F for F, fr in zip(self.facets, self.free_vertices) if fr)


def maximal_cliques(G: Graph) -> List[FrozenSet[int]]:
    """Bron-Kerbosch with pivoting."""
    adj = G.adj
    out: List[FrozenSet[int]] = []

    def bk(R: frozenset, P: set, X: set):
        if not P and not X:
            out.append(R)
            return
        pivot = max(P | X, key=lambda u: (len(adj[u] & P), -u))
        for v in sorted(P - adj[pivot]):
            bk(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    if G.n:
        bk(frozenset(), set(G.vertices), set())
    return sorted(out, key=lambda F: sorted(F))


def clique_complex(G: Graph) -> CliqueComplex:
    facets = tuple(maximal_cliques(G))
    count: Dict[int, int] = {}
    for F in facets:
        for v in F:
            count[v] = count.get(v, 0) + 1
    free = tuple(frozenset(v for v in F if count[v] == 1) for F in facets)
    return CliqueComplex(facets, free)


@dataclass(frozen=True)
class CMChordalResult:
    cm: bool
    partition: Tuple[FrozenSet[int], ...]

    def __bool__(self):
        return self.cm


def is_cm_chordal(G: Graph) -> CMChordalResult:
    """Is ``[n]`` the disjoint union of the facets that have a free vertex?"""
    if not is_chordal(G):
        raise GraphError("the Cohen-Macaulay criterion applies to chordal graphs only")
    parts = clique_complex(G).facets_with_free_vertex()
    covered: set = set()
    disjoint = True
    for F in parts:
        if covered & F:
            disjoint = False
        covered |= F
    return CMChordalResult(disjoint and covered == set(G.vertices), parts)


def disjoint_facet_graph(sizes: Sequence[int], links: Sequence[Tuple[int, int]] = ()) -> Graph:
    """Cliques of the given sizes on consecutive vertices, plus linking edges.

    The links should join non-free vertices only; the last vertex of each
    clique is meant to stay free.
    """
    edges = []
    start = 1
    for s in sizes:
        block = range(start, start + s)
        edges += [(i, j) for i in block for j in block if i < j]
        start += s
    edges += list(links)
    return Graph.from_edges(start - 1, edges)


def star_graph(n: int, attach) -> Graph:
    """Star graph based on ``G_n``.

    ``attach`` maps each pendant vertex label ``n+1..n+m`` (or, given as a
    list, each pendant in order) to the non-empty set of base vertices it is
    joined to.
    """
    if n < 1:
        raise GraphError("a star graph needs n >= 1")
    if isinstance(attach, Mapping):
        keys = sorted(attach)
        m = len(keys)
        if keys != list(range(n + 1, n + m + 1)):
            raise GraphError(f"pendant labels must be {n + 1}..{n + m}")
        sets = [attach[k] for k in keys]
    else:
        sets = list(attach)
        m = len(sets)
    if m < 1:
        raise GraphError("a star graph needs m >= 1 pendant vertices")
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for k, S in enumerate(sets, start=n + 1):
        S = set(S)
        if not S:
            raise GraphError(f"pendant {k} is isolated; star graphs are connected")
        if not S <= set(range(1, n + 1)):
            raise GraphError(f"pendant {k} may only attach to base vertices 1..{n}")
        edges += [(i, k) for i in S]
    names = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"t{k}" for k in range(1, m + 1))
    G = Graph.from_edges(n + m, edges, names=names, base_size=n)
    if not is_star_graph(G, n):
        raise GraphError("not a star graph")
    return G


def is_star_graph(G: Graph, n: int | None = None) -> bool:
    n = G.base_size if n is None else n
    if n is None or not 1 <= n < G.n:
        return False
    base = range(1, n + 1)
    if any(not G.has_edge(i, j) for i in base for j in base if i < j):
        return False
    if any(i > n and j > n for i, j in G.edges):
        return False
    return G.is_connected()


def pendant_map(G: Graph) -> Dict[int, List[int]]:
    """Base vertex -> sorted pendant vertices adjacent to it."""
    n = G.base_size
    return {i: sorted(k for k in G.adj[i] if k > n) for i in range(1, n + 1)}


def star_cover_list(G: Graph) -> List[Tuple[int, ...]]:
    """The monomials ``u_1..u_n, u_{n+1}`` for a star graph (not minimalized)."""
    if not is_star_graph(G):
        raise GraphError("star_cover_generators needs a star graph")
    n = G.base_size
    pend = pendant_map(G)
    out = []
    for i in range(1, n + 1):
        out.append(_unit(G.n, [j for j in range(1, n + 1) if j != i] + pend[i]))
    out.append(_unit(G.n, range(1, n + 1)))
    return out


def star_cover_generators(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.ring(), star_cover_list(G))
