"""Scan connected chordal graphs for counterexamples to componentwise linear powers.

Graphs with at most ``EXHAUSTIVE_MAX`` vertices are enumerated up to
isomorphism; larger ones are sampled.  Every graph is built by adding
vertices whose earlier neighbourhood is a non-empty clique, which produces
exactly the connected chordal graphs.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

from .graphs import Graph, cover_ideal, is_chordal, maximal_cliques

EXHAUSTIVE_MAX = 6
MAX_VERTICES = 8


def canonical_form(G: Graph) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Lexicographically smallest relabelled edge list.

    Only relabellings that sort vertices by degree are tried, which keeps the
    search small and still yields an isomorphism invariant.
    """
    deg = {v: len(G.adj[v]) for v in G.vertices}
    classes = [sorted(v for v in G.vertices if deg[v] == d) for d in sorted(set(deg.values()))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for p in parts for v in p]
        lab = {v: k + 1 for k, v in enumerate(order)}
        e = tuple(sorted((min(lab[i], lab[j]), max(lab[i], lab[j])) for i, j in G.edges))
        if best is None or e < best:
            best = e
    return (G.n, best or ())


def _cliques_of(adj: List[set], k: int) -> List[frozenset]:
    """All non-empty cliques among vertices ``0..k-1``."""
    out = []

    def grow(cl: frozenset, cand: List[int]):
        for p, v in enumerate(cand):
            c2 = cl | {v}
            out.append(c2)
            grow(c2, [u for u in cand[p + 1:] if u in adj[v]])

    grow(frozenset(), list(range(k)))
    return out


def connected_chordal_graphs(n: int) -> List[Graph]:
    """All connected chordal graphs on ``n`` vertices up to isomorphism.

    Deleting a simplicial vertex keeps a connected chordal graph connected
    and chordal, so extending one representative per class at each size
    reaches every class.
    """
    if n < 1:
        return []
    level = [Graph(1, frozenset())]
    for k in range(1, n):
        seen = {}
        for G in level:
            adj = [set(u - 1 for u in G.adj[v]) for v in G.vertices]
            for cl in _cliques_of(adj, k):
                H = Graph.from_edges(k + 1, list(G.edges) + [(u + 1, k + 1) for u in cl])
                seen.setdefault(canonical_form(H), H)
        level = [seen[c] for c in sorted(seen)]
    return level


def random_connected_chordal(n: int, rng: random.Random) -> Graph:
    edges = []
    G = Graph(1, frozenset())
    for k in range(2, n + 1):
        cliques = maximal_cliques(G)
        F = sorted(rng.choice(cliques))
        size = rng.randint(1, len(F))
        S = rng.sample(F, size)
        edges += [(v, k) for v in S]
        G = Graph.from_edges(k, edges)
    return G


@dataclass
class ScanEntry:
    n: int
    edges: List[Tuple[int, int]]
    verdict: str
    sequence: List[str] = field(default_factory=list)
    seconds: float = 0.0
    certificate: Optional[dict] = None
    error: Optional[str] = None


@dataclass
class ScanReport:
    max_vertices: int
    samples: int
    seed: int
    entries: List[ScanEntry]

    def counts(self) -> dict:
        c = {"pass": 0, "fail": 0, "inconclusive": 0}
        for e in self.entries:
            c[e.verdict] = c.get(e.verdict, 0) + 1
        return c

    def counterexamples(self) -> List[ScanEntry]:
        return [e for e in self.entries if e.verdict == "fail"]

    def to_dict(self) -> dict:
        return {"max_vertices": self.max_vertices, "samples": self.samples, "seed": self.seed,
                "counts": self.counts(), "entries": [asdict(e) for e in self.entries]}


def scan_graphs(max_vertices: int, samples: int = 0, seed: int = 0,
                min_vertices: int = 1) -> List[Graph]:
    if max_vertices > MAX_VERTICES:
        raise ValueError(f"the scan is limited to {MAX_VERTICES} vertices")
    out = []
    for n in range(max(min_vertices, 2), max_vertices + 1):
        if n <= EXHAUSTIVE_MAX:
            out += connected_chordal_graphs(n)
        else:
            rng = random.Random(seed * 1000 + n)
            out += [random_connected_chordal(n, rng) for _ in range(samples)]
    return out


def check_graph(G: Graph, trials: int = 3, seed: int = 0, bound: int = 100,
                limits=None) -> ScanEntry:
    from .dseq import generic_d_sequence
    from .groebner import ResourceLimitExceeded, resource_limits

    if not is_chordal(G):
        raise ValueError("the scan expects chordal graphs")
    t0 = time.perf_counter()
    entry = ScanEntry(G.n, G.sorted_edges(), "inconclusive")
    try:
        with resource_limits(*(limits or (None, None))):
            rep = generic_d_sequence(cover_ideal(G).to_ideal(), trials, seed, bound)
        entry.verdict = rep.verdict
        entry.sequence = rep.sequence
        if rep.verdict == "fail":
            entry.certificate = rep.to_dict()
    except ResourceLimitExceeded as exc:
        entry.error = str(exc)
    entry.seconds = time.perf_counter() - t0
    return entry


def _check_packed(args):
    n, edges, trials, seed, bound, limits = args
    return check_graph(Graph.from_edges(n, edges), trials, seed, bound, limits)


def scan_chordal(max_vertices: int, samples: int = 0, seed: int = 0, trials: int = 3,
                 bound: int = 100, workers: int = 1, min_vertices: int = 1,
                 limits=None) -> ScanReport:
    """Run the generic d-sequence test on the cover ideal of each scanned graph."""
    graphs = scan_graphs(max_vertices, samples, seed, min_vertices)
    jobs = [(G.n, G.sorted_edges(), trials, seed, bound, limits) for G in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            entries = list(ex.map(_check_packed, jobs))
    else:
        entries = [_check_packed(j) for j in jobs]
    return ScanReport(max_vertices, samples, seed, entries)
