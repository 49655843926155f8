from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings

from hgpoly.bipoly import BiPoly
from hgpoly.enumeration import (
    _edge_block,
    _vertex_block,
    edge_induced_poly,
    independence_poly,
    vertex_induced_poly,
)
from hgpoly.errors import LimitExceeded
from hgpoly.hypergraph import disjoint_union, validate
from hgpoly.corpus import star

from . import oracles
from .strategies import hypergraphs


class TestFrozenValues:
    def test_k3_vertex_poly(self, k3):
        assert vertex_induced_poly(k3) == BiPoly({(0, 0): 1, (1, 0): 3, (2, 1): 3, (3, 3): 1})

    def test_k3_edge_poly(self, k3):
        assert edge_induced_poly(k3) == BiPoly({(0, 0): 1, (2, 1): 3, (3, 2): 3, (3, 3): 1})

    def test_path3_vertex_poly(self, path3):
        assert vertex_induced_poly(path3) == BiPoly(
            {(0, 0): 1, (1, 0): 3, (2, 0): 1, (2, 1): 2, (3, 2): 1}
        )

    def test_path3_edge_poly(self, path3):
        assert edge_induced_poly(path3) == BiPoly({(0, 0): 1, (2, 1): 2, (3, 2): 1})

    def test_edgeless(self, edgeless3):
        assert vertex_induced_poly(edgeless3) == BiPoly({(i, 0): comb(3, i) for i in range(4)})
        assert edge_induced_poly(edgeless3) == BiPoly.one()

    def test_star_edge_poly(self):
        for m in (1, 2, 3, 5):
            h = star(m)
            expected = BiPoly({(0, 0): 1} | {(j + 1, j): comb(m, j) for j in range(1, m + 1)})
            assert edge_induced_poly(h) == expected

    def test_independence_poly_k3(self, k3):
        assert independence_poly(k3).coeffs == (1, 3)

    def test_independence_poly_blocked_singleton(self):
        h = validate(["a"], [["a"]])
        assert independence_poly(h).coeffs == (1,)

    def test_empty_hypergraph(self):
        h = validate([], [])
        assert vertex_induced_poly(h) == BiPoly.one()
        assert edge_induced_poly(h) == BiPoly.one()
        assert independence_poly(h).coeffs == (1,)


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_vertex_poly_matches_naive(h):
    assert vertex_induced_poly(h).terms == oracles.naive_vertex_poly(h)


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_edge_poly_matches_naive(h):
    assert edge_induced_poly(h).terms == oracles.naive_edge_poly(h)


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_independence_poly_matches_naive(h):
    assert list(independence_poly(h).coeffs) == oracles.naive_independent_sizes(h)


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_row_and_column_sums(h):
    p = vertex_induced_poly(h)
    for i in range(h.n + 1):
        assert sum(c for (ii, _), c in p.terms.items() if ii == i) == comb(h.n, i)
    s = edge_induced_poly(h)
    for j in range(h.m + 1):
        assert sum(c for (_, jj), c in s.terms.items() if jj == j) == comb(h.m, j)


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_no_x_without_vertices(h):
    # the only i=0 term in either polynomial is the constant 1
    for poly in (vertex_induced_poly(h), edge_induced_poly(h)):
        assert {e: c for e, c in poly.terms.items() if e[0] == 0} == {(0, 0): 1}


@settings(max_examples=40, deadline=None)
@given(hypergraphs(max_n=4, max_m=4), hypergraphs(max_n=4, max_m=4))
def test_multiplicative_over_disjoint_union(h1, h2):
    relabeled = validate(
        [f"r{lbl}" for lbl in h2.labels],
        [[f"r{lbl}" for lbl in e] for e in h2.edge_label_sets()],
    )
    u = disjoint_union(h1, relabeled)
    assert vertex_induced_poly(u) == vertex_induced_poly(h1) * vertex_induced_poly(h2)
    assert edge_induced_poly(u) == edge_induced_poly(h1) * edge_induced_poly(h2)


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_independence_equals_vertex_poly_at_y0(h):
    assert independence_poly(h) == vertex_induced_poly(h).eval_y(0)


class TestBlocks:
    def test_vertex_blocks_merge_to_full_sweep(self, corpus):
        for _, h in corpus[:40]:
            full = _vertex_block((h.edges, h.incident, 0, 1 << h.n))
            for nblocks in (2, 3):
                step = -(-(1 << h.n) // nblocks)
                merged: dict = {}
                for a in range(0, 1 << h.n, step):
                    part = _vertex_block((h.edges, h.incident, a, min(a + step, 1 << h.n)))
                    for k, v in part.items():
                        merged[k] = merged.get(k, 0) + v
                assert merged == full

    def test_edge_blocks_merge_to_full_sweep(self, k3):
        full = _edge_block((k3.edges, 0, 8))
        merged: dict = {}
        for a, b in ((0, 3), (3, 8)):
            for k, v in _edge_block((k3.edges, a, b)).items():
                merged[k] = merged.get(k, 0) + v
        assert merged == full

    def test_parallel_flag_bit_identical(self):
        # large enough that the pool actually engages (2^n >= 4096)
        h = validate([f"v{k}" for k in range(12)], [[f"v{k}", f"v{k+1}"] for k in range(11)])
        assert vertex_induced_poly(h, parallel=True) == vertex_induced_poly(h)
        assert independence_poly(h, parallel=True) == independence_poly(h)


class TestLimits:
    def test_vertex_limit_message_names_values(self):
        h = validate([f"v{k}" for k in range(5)], [])
        with pytest.raises(LimitExceeded) as exc:
            vertex_induced_poly(h, limit=4)
        assert "n=5" in str(exc.value) and "4" in str(exc.value)

    def test_edge_limit(self, k3):
        with pytest.raises(LimitExceeded) as exc:
            edge_induced_poly(k3, limit=2)
        assert "m=3" in str(exc.value)

    def test_limit_override_allows_run(self, k3):
        assert edge_induced_poly(k3, limit=3) == edge_induced_poly(k3)
