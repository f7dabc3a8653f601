import itertools
import random
from math import comb

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cwlpowers import catalog as cat
from cwlpowers.betti import (BettiTable, OracleLimitExceeded, SimplicialComplexQ,
                             betti_numbers, component, has_linear_resolution,
                             is_componentwise_linear, lcm_lattice, minimal_generators,
                             multigraded_betti, rank_bareiss, rank_gauss,
                             taylor_bound_holds, upper_koszul_complex)
from cwlpowers.graphs import cover_ideal

from strategies import monomial_ideals


def borel_closure(gens, n):
    """Strongly stable closure: repeatedly swap x_j for x_i with i < j."""
    todo, out = list(gens), set()
    while todo:
        u = todo.pop()
        if u in out:
            continue
        out.add(u)
        for j in range(n):
            if u[j]:
                for i in range(j):
                    v = list(u)
                    v[j] -= 1
                    v[i] += 1
                    todo.append(tuple(v))
    return minimal_generators(out)


def eliahou_kervaire(gens):
    T = {}
    for u in gens:
        m = max(k for k, e in enumerate(u) if e) + 1
        d = sum(u)
        for i in range(m):
            T[(i, i + d)] = T.get((i, i + d), 0) + comb(m - 1, i)
    return T


def taylor_euler(gens):
    """Multigraded alternating sum from inclusion-exclusion over generator subsets."""
    out = {}
    for r in range(1, len(gens) + 1):
        for S in itertools.combinations(gens, r):
            b = tuple(max(c) for c in zip(*S))
            out[b] = out.get(b, 0) + (-1) ** (r - 1)
    return {b: v for b, v in out.items() if v}


class TestExamples:
    def test_principal(self):
        T = betti_numbers([(1, 1, 1)])
        assert T.nonzero() == {(0, 3): 1}

    def test_two_generators(self):
        T = betti_numbers([(1, 1, 0), (0, 1, 1)])
        assert T.nonzero() == {(0, 2): 2, (1, 3): 1}

    def test_path_cover(self):
        T = betti_numbers(cover_ideal(cat.path_of_length(3)))
        assert T.get(0, 2) == 3
        assert all(j == i + 2 for i, j in T.nonzero())

    def test_linear_resolution(self):
        assert has_linear_resolution([(2, 1, 0)])
        assert not has_linear_resolution([(2, 0), (0, 2)])
        assert has_linear_resolution(cover_ideal(cat.path_of_length(3)))

    def test_cwl(self):
        assert is_componentwise_linear(cover_ideal(cat.path_of_length(4)))
        r = is_componentwise_linear([(2, 0), (0, 3)])
        assert not r.cwl
        assert has_linear_resolution(component([(2, 0), (0, 3)], 2))
        assert not has_linear_resolution(component([(2, 0), (0, 3)], 3))
        assert r.components[3] is False

    def test_component(self):
        assert sorted(component([(2, 0), (0, 3)], 3)) == [(0, 3), (2, 1), (3, 0)]

    def test_table_string(self):
        s = str(betti_numbers([(1, 1, 0), (0, 1, 1)]))
        assert s.splitlines()[1].split() == ["total:", "2", "1"]
        assert s.splitlines()[2].split() == ["2:", "2", "1"]

    def test_guards(self):
        with pytest.raises(OracleLimitExceeded):
            betti_numbers([tuple([1] * 9)])
        with pytest.raises(OracleLimitExceeded):
            betti_numbers([(30, 0), (0, 1)])
        assert betti_numbers([(30, 0), (0, 1)], max_lcm_degree=40).get(1, 31) == 1
        with pytest.raises(ValueError):
            betti_numbers([])

    def test_lcm_lattice(self):
        L = {tuple(r) for r in lcm_lattice([(1, 0), (0, 1)])}
        assert L == {(1, 0), (0, 1), (1, 1)}

    def test_ranks(self):
        assert rank_gauss([[1, 2], [2, 4]]) == rank_bareiss([[1, 2], [2, 4]]) == 1
        assert rank_gauss([]) == rank_bareiss([]) == 0


class TestHomology:
    def test_sphere(self):
        K = SimplicialComplexQ.from_faces([(0, 1), (1, 2), (0, 2)])
        assert K.reduced_homology() == {-1: 0, 0: 0, 1: 1}
        assert K.reduced_euler_characteristic() == -1

    def test_empty_complex(self):
        K = SimplicialComplexQ.from_faces([()])
        assert K.reduced_homology() == {-1: 1}

    def test_upper_koszul(self):
        K = upper_koszul_complex([(1, 1, 0), (0, 1, 1)], (1, 1, 1))
        assert K.is_closed()
        assert K.reduced_homology()[0] == 1

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.lists(st.integers(0, 6), min_size=1, max_size=4, unique=True),
                    min_size=1, max_size=8))
    def test_two_methods(self, faces):
        K = SimplicialComplexQ.from_faces(faces)
        assert K.is_closed()
        a, b = K.reduced_homology("gauss"), K.reduced_homology("bareiss")
        assert a == b
        assert sum((-1) ** d * v for d, v in a.items()) == K.reduced_euler_characteristic()

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
    def test_rank_methods(self, rows):
        assert rank_gauss(rows) == rank_bareiss(rows)


class TestOracles:
    def test_eliahou_kervaire(self):
        rng = random.Random(9)
        for _ in range(25):
            n = rng.randint(2, 4)
            seeds = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(1, 3))]
            seeds = [s for s in seeds if any(s)] or [(1,) + (0,) * (n - 1)]
            gens = borel_closure(seeds, n)
            T = betti_numbers(gens)
            assert T.nonzero() == {k: v for k, v in eliahou_kervaire(gens).items() if v}

    @settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(monomial_ideals(4, 5, 3))
    def test_multigraded_euler(self, gens):
        gens = minimal_generators(gens)
        B = multigraded_betti(gens)
        chi = {}
        for (b, i), v in B.items():
            chi[b] = chi.get(b, 0) + (-1) ** i * v
        chi = {b: v for b, v in chi.items() if v}
        assert chi == taylor_euler(gens)

    @settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(monomial_ideals(4, 5, 3))
    def test_invariants(self, gens):
        gens = minimal_generators(gens)
        T = betti_numbers(gens)
        by_deg = {}
        for g in gens:
            by_deg[sum(g)] = by_deg.get(sum(g), 0) + 1
        assert {j: v for (i, j), v in T.nonzero().items() if i == 0} == by_deg
        assert taylor_bound_holds(gens, T)
        assert betti_numbers(gens, method="gauss").entries == T.entries

    def test_table_to_dict(self):
        T = BettiTable({(0, 2): 2, (1, 3): 1})
        assert T.to_dict() == {"entries": [[0, 2, 2], [1, 3, 1]], "reg": 2, "totals": [2, 1]}
