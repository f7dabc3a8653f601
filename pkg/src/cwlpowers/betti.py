"""Graded Betti numbers of monomial ideals by simplicial homology.

For a monomial ideal ``M`` and a multidegree ``b`` the upper Koszul complex

    K^b(M) = { s ⊆ supp(b) : x^(b - s) in M }

satisfies ``beta_{i,b}(M) = dim H~_{i-1}(K^b(M); Q)``.  Only multidegrees in
the lcm lattice of the generators can carry homology; they are found by a
vectorized scan of the box below the lcm of all generators.

This module is an independent oracle: it works on raw exponent tuples and
does not use the Gröbner machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

MAX_VARS = 8
MAX_LCM_DEGREE = 24
MAX_BOX = 4_000_000


class OracleLimitExceeded(RuntimeError):
    """The input is outside the oracle's resource guard."""


def _gens_of(M) -> List[Tuple[int, ...]]:
    gens = getattr(M, "gens", M)
    return [tuple(int(e) for e in g) for g in gens]


def minimal_generators(gens: Iterable[Sequence[int]]) -> List[Tuple[int, ...]]:
    cands = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), m))
    kept: List[Tuple[int, ...]] = []
    for m in cands:
        if not any(all(a <= b for a, b in zip(g, m)) for g in kept):
            kept.append(m)
    return kept


# linear algebra

def rank_gauss(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by Gaussian elimination with exact fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, len(a)):
            if a[r][c] != 0:
                f = a[r][c] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def rank_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, len(a)):
            q = a[r][c]
            a[r] = [(p * x - q * y) // prev for x, y in zip(a[r], a[rank])]
        prev = p
        rank += 1
    return rank


_RANKS = {"gauss": rank_gauss, "bareiss": rank_bareiss}


@dataclass(frozen=True)
class SimplicialComplexQ:
    """Finite simplicial complex given by all its faces (as frozensets)."""

    vertices: Tuple[int, ...]
    faces: frozenset

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplexQ":
        fs = {frozenset(f) for f in faces}
        closed = set()
        for f in fs:
            for k in range(len(f) + 1):
                closed.update(frozenset(s) for s in itertools.combinations(sorted(f), k))
        verts = tuple(sorted(set().union(*closed))) if closed else ()
        return cls(verts, frozenset(closed))

    def is_closed(self) -> bool:
        return all(f - {v} in self.faces for f in self.faces for v in f)

    def faces_of_size(self, d: int) -> List[Tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.faces if len(f) == d)

    def f_vector(self) -> List[int]:
        top = max((len(f) for f in self.faces), default=-1)
        return [sum(1 for f in self.faces if len(f) == d) for d in range(top + 1)]

    def boundary_matrix(self, d: int) -> List[List[int]]:
        """Matrix of the boundary map from size-``d`` to size-``d-1`` faces."""
        rows = self.faces_of_size(d - 1)
        cols = self.faces_of_size(d)
        pos = {f: k for k, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for c, f in enumerate(cols):
            for k in range(len(f)):
                mat[pos[f[:k] + f[k + 1:]]][c] = -1 if k % 2 else 1
        return mat

    def reduced_homology(self, method: str = "bareiss") -> Dict[int, int]:
        """``{dim: rank of reduced homology}`` for dimensions -1, 0, 1, ..."""
        rank = _RANKS[method]
        fv = self.f_vector()
        if not fv:
            return {}
        top = len(fv) - 1
        ranks = [0] * (top + 2)
        for d in range(1, top + 1):
            ranks[d] = rank(self.boundary_matrix(d)) if fv[d] and fv[d - 1] else 0
        return {d - 1: fv[d] - ranks[d] - ranks[d + 1] for d in range(top + 1)}

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (len(f) - 1) for f in self.faces)


# complexes as bitmasks over the support of b

_HOMOLOGY_CACHE: Dict[Tuple[int, frozenset], Tuple[int, ...]] = {}


def _mask_homology(s: int, faces: frozenset, method: str) -> Tuple[int, ...]:
    """Reduced homology ranks of a complex on vertices ``0..s-1``, faces as bitmasks.

    Entry ``d`` is the rank in dimension ``d - 1``.
    """
    key = (s, faces, method)
    hit = _HOMOLOGY_CACHE.get(key)
    if hit is not None:
        return hit
    full = (1 << s) - 1
    cone = any(all((f | (1 << v)) in faces for f in faces) for v in range(s))
    if cone and faces:
        out: Tuple[int, ...] = ()
    else:
        K = SimplicialComplexQ(tuple(range(s)), frozenset(
            frozenset(v for v in range(s) if f >> v & 1) for f in faces if f <= full))
        h = K.reduced_homology(method)
        out = tuple(h.get(d - 1, 0) for d in range(s + 1))
    _HOMOLOGY_CACHE[key] = out
    return out


def lcm_lattice(gens: Sequence[Sequence[int]], max_box: int = MAX_BOX) -> np.ndarray:
    """All lcms of non-empty generator subsets, as rows of an integer array."""
    G = np.array(gens, dtype=np.int64)
    top = G.max(axis=0)
    shape = tuple(int(t) + 1 for t in top)
    size = int(np.prod(shape, dtype=np.int64))
    if size > max_box:
        raise OracleLimitExceeded(f"lcm box has {size} points (limit {max_box})")
    pts = np.indices(shape).reshape(len(shape), -1).T
    keep = []
    step = max(1, 2_000_000 // max(1, len(G) * G.shape[1]))
    for a in range(0, len(pts), step):
        B = pts[a:a + step]
        div = (G[None, :, :] <= B[:, None, :]).all(axis=2)
        lc = np.where(div[:, :, None], G[None, :, :], 0).max(axis=1)
        ok = div.any(axis=1) & (lc == B).all(axis=1)
        keep.append(B[ok])
    return np.concatenate(keep) if keep else np.zeros((0, G.shape[1]), dtype=np.int64)


@dataclass
class BettiTable:
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def reg(self) -> int:
        return max((j - i for (i, j), v in self.entries.items() if v), default=0)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def nonzero(self) -> Dict[Tuple[int, int], int]:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def projdim(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    def totals(self) -> List[int]:
        return [sum(v for (i, _), v in self.entries.items() if i == k)
                for k in range(self.projdim() + 1)]

    def to_dict(self) -> dict:
        return {"entries": [[i, j, v] for (i, j), v in self.nonzero().items()],
                "reg": self.reg, "totals": self.totals()}

    def __str__(self) -> str:
        nz = self.nonzero()
        if not nz:
            return "(zero table)"
        cols = range(self.projdim() + 1)
        shifts = sorted({j - i for i, j in nz})
        lo, hi = shifts[0], shifts[-1]
        width = max(len(str(v)) for v in self.totals() + list(nz.values())) + 1
        width = max(width, len(str(self.projdim())) + 1)
        lines = ["       " + "".join(f"{c:>{width}}" for c in cols),
                 "total: " + "".join(f"{v:>{width}}" for v in self.totals())]
        for r in range(lo, hi + 1):
            cells = []
            for c in cols:
                v = self.get(c, c + r)
                cells.append(f"{(v if v else '.'):>{width}}")
            lines.append(f"{str(r) + ':':<7}" + "".join(cells))
        return "\n".join(lines)


def _check_guard(gens, max_vars, max_lcm_degree):
    if not gens:
        raise ValueError("the oracle needs a nonzero monomial ideal")
    n = len(gens[0])
    if n > max_vars:
        raise OracleLimitExceeded(f"{n} variables exceed the oracle limit {max_vars}")
    lcm_deg = sum(max(g[k] for g in gens) for k in range(n))
    if lcm_deg > max_lcm_degree:
        raise OracleLimitExceeded(
            f"lcm of the generators has degree {lcm_deg} (limit {max_lcm_degree})")


def multigraded_betti(M, method: str = "bareiss", max_vars: int = MAX_VARS,
                      max_lcm_degree: int = MAX_LCM_DEGREE) -> Dict[Tuple[Tuple[int, ...], int], int]:
    """``{(b, i): beta_{i,b}}`` over the lcm lattice of ``M``."""
    gens = minimal_generators(_gens_of(M))
    _check_guard(gens, max_vars, max_lcm_degree)
    n = len(gens[0])
    G = np.array(gens, dtype=np.int64)
    lattice = lcm_lattice(gens)
    out: Dict[Tuple[Tuple[int, ...], int], int] = {}
    for b in lattice:
        supp = [k for k in range(n) if b[k]]
        s = len(supp)
        faces = set()
        for mask in range(1 << s):
            c = b.copy()
            for p in range(s):
                if mask >> p & 1:
                    c[supp[p]] -= 1
            if (G <= c).all(axis=1).any():
                faces.add(mask)
        h = _mask_homology(s, frozenset(faces), method)
        bt = tuple(int(x) for x in b)
        for i, v in enumerate(h):
            if v:
                out[(bt, i)] = v
    return out


def betti_numbers(M, method: str = "bareiss", max_vars: int = MAX_VARS,
                  max_lcm_degree: int = MAX_LCM_DEGREE) -> BettiTable:
    """Graded Betti table ``beta_{i,j}`` of a nonzero monomial ideal."""
    T = BettiTable()
    for (b, i), v in multigraded_betti(M, method, max_vars, max_lcm_degree).items():
        key = (i, sum(b))
        T.entries[key] = T.entries.get(key, 0) + v
    return T


def has_linear_resolution(M, **guard) -> bool:
    gens = minimal_generators(_gens_of(M))
    degs = {sum(g) for g in gens}
    if len(degs) != 1:
        return False
    (d,) = degs
    T = betti_numbers(gens, **guard)
    return all(j == i + d for (i, j) in T.nonzero())


def component(gens: Sequence[Sequence[int]], j: int) -> List[Tuple[int, ...]]:
    """Minimal generators of ``M_<j>``: all degree-``j`` multiples of generators."""
    gens = minimal_generators(gens)
    n = len(gens[0])
    out = set()
    for g in gens:
        d = j - sum(g)
        if d < 0:
            continue
        for extra in itertools.combinations_with_replacement(range(n), d):
            m = list(g)
            for k in extra:
                m[k] += 1
            out.add(tuple(m))
    return minimal_generators(out)


@dataclass
class CWLResult:
    cwl: bool
    reg: int
    components: Dict[int, bool]

    def __bool__(self):
        return self.cwl


def is_componentwise_linear(M, **guard) -> CWLResult:
    """Test ``M_<j>`` for linear resolution for every ``j`` up to ``reg M``."""
    gens = minimal_generators(_gens_of(M))
    reg = betti_numbers(gens, **guard).reg
    lo = min(sum(g) for g in gens)
    comps = {}
    for j in range(lo, reg + 1):
        comps[j] = has_linear_resolution(component(gens, j), **guard)
    return CWLResult(all(comps.values()), reg, comps)


def taylor_bound_holds(M, T: BettiTable | None = None) -> bool:
    """``beta_{i,j} = 0`` for ``i >=`` the number of generators."""
    gens = minimal_generators(_gens_of(M))
    T = T or betti_numbers(gens)
    return all(i < len(gens) for (i, _) in T.nonzero())


def upper_koszul_complex(M, b: Sequence[int]) -> SimplicialComplexQ:
    """``K^b(M)`` with vertices labelled by variable index."""
    gens = minimal_generators(_gens_of(M))
    supp = [k for k, e in enumerate(b) if e]
    faces = []
    for r in range(len(supp) + 1):
        for sig in itertools.combinations(supp, r):
            c = list(b)
            for k in sig:
                c[k] -= 1
            if any(all(x <= y for x, y in zip(g, c)) for g in gens):
                faces.append(frozenset(sig))
    return SimplicialComplexQ(tuple(supp), frozenset(faces))
