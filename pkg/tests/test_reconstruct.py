from __future__ import annotations

import pytest
from hypothesis import given, settings

from hgpoly.bipoly import BiPoly
from hgpoly.enumeration import edge_induced_poly, vertex_induced_poly
from hgpoly.errors import (
    InconsistentDeck,
    LengthMismatch,
    NegativeTopCoefficient,
    NoEdges,
    NonIntegerCoefficient,
    SingleSpanningEdge,
    TooFewVertices,
)
from hgpoly.homology import hochster_betti
from hgpoly.hypergraph import validate
from hgpoly.reconstruct import (
    check_reconstructible,
    reconstruct_edge_poly,
    reconstruct_f_vector,
    reconstruct_hilbert_function,
    reconstruct_multigraded_betti,
    reconstruct_vertex_poly,
    top_betti_report,
    verify_deck_sum_identity,
)
from hgpoly.stanley_reisner import f_vector, hilbert_function
from hgpoly.corpus import wheel

from .strategies import reconstructible_hypergraphs


class TestExclusions:
    def test_k3_passes(self, k3):
        check_reconstructible(k3)

    def test_too_few_vertices(self):
        h = validate(["a", "b"], [["a", "b"]])
        with pytest.raises(TooFewVertices):
            check_reconstructible(h)

    def test_no_edges(self):
        h = validate(list("abcde"), [])
        with pytest.raises(NoEdges):
            check_reconstructible(h)

    def test_single_spanning_edge(self):
        h = validate(["a", "b", "c"], [["a", "b", "c"]])
        with pytest.raises(SingleSpanningEdge):
            check_reconstructible(h)

    def test_spanning_edge_among_smaller_is_impossible(self):
        # the antichain invariant itself forbids a full edge next to others,
        # so the single-spanning-edge test only needs m == 1
        from hgpoly.errors import AntichainViolation

        with pytest.raises(AntichainViolation):
            validate(["a", "b", "c"], [["a", "b", "c"], ["a", "b"]])


class TestDeckSumIdentity:
    def test_k3_both_polynomials(self, k3):
        assert verify_deck_sum_identity(k3, "edge")
        assert verify_deck_sum_identity(k3, "vertex")

    def test_rejects_unknown_kind(self, k3):
        with pytest.raises(ValueError):
            verify_deck_sum_identity(k3, "both")

    def test_propagates_exclusions(self, edgeless3):
        with pytest.raises(NoEdges):
            verify_deck_sum_identity(edgeless3, "edge")


class TestReconstructEdgePoly:
    def test_k3_from_frozen_cards(self):
        card = BiPoly({(0, 0): 1, (2, 1): 1})
        got = reconstruct_edge_poly([card] * 3, 3)
        assert got == BiPoly({(0, 0): 1, (2, 1): 3, (3, 2): 3, (3, 3): 1})

    def test_path3(self, path3):
        polys = [edge_induced_poly(c) for c in path3.deck().cards]
        assert reconstruct_edge_poly(polys, 3) == BiPoly({(0, 0): 1, (2, 1): 2, (3, 2): 1})

    def test_wrong_length(self):
        with pytest.raises(LengthMismatch):
            reconstruct_edge_poly([BiPoly.one()] * 2, 3)

    def test_too_few_vertices(self):
        with pytest.raises(TooFewVertices):
            reconstruct_edge_poly([BiPoly.one()] * 2, 2)

    def test_edgeless_deck_rejected(self):
        with pytest.raises(NoEdges):
            reconstruct_edge_poly([BiPoly.one()] * 4, 4)

    def test_perturbed_coefficient_breaks_divisibility(self):
        # parent: path on 4 vertices; bump one card's (2,1) count so the
        # deck sum at i=2 is no longer divisible by n-i=2
        h = validate(list("abcd"), [["a", "b"], ["b", "c"], ["c", "d"]])
        polys = [edge_induced_poly(c) for c in h.deck().cards]
        polys[0] = polys[0] + BiPoly.monomial(2, 1)
        with pytest.raises(NonIntegerCoefficient) as exc:
            reconstruct_edge_poly(polys, 4)
        assert "i=2" in str(exc.value)

    def test_perturbed_constant_detected(self, k3):
        polys = [edge_induced_poly(c) for c in k3.deck().cards]
        polys[1] = polys[1] + BiPoly.one()
        with pytest.raises(InconsistentDeck):
            reconstruct_edge_poly(polys, 3)

    def test_overfull_column_goes_negative(self):
        # each fake card claims far more 2-edge subsets than m=3 edges allow
        fake = BiPoly({(0, 0): 1, (2, 1): 1, (2, 2): 7})
        with pytest.raises(NegativeTopCoefficient):
            reconstruct_edge_poly([fake] * 3, 3)


class TestReconstructVertexPoly:
    def test_k3(self, k3):
        polys = [vertex_induced_poly(c) for c in k3.deck().cards]
        assert reconstruct_vertex_poly(polys, 3) == vertex_induced_poly(k3)

    def test_path3(self, path3):
        polys = [vertex_induced_poly(c) for c in path3.deck().cards]
        expected = BiPoly({(0, 0): 1, (1, 0): 3, (2, 0): 1, (2, 1): 2, (3, 2): 1})
        assert reconstruct_vertex_poly(polys, 3) == expected


class TestReconstructFVector:
    def test_k3(self, k3):
        assert reconstruct_f_vector(k3.deck()) == (1, 3)

    def test_path3(self, path3):
        assert reconstruct_f_vector(path3.deck()) == (1, 3, 1)

    def test_edgeless_deck_rejected(self, edgeless3):
        with pytest.raises(NoEdges):
            reconstruct_f_vector(edgeless3.deck())


class TestReconstructHilbert:
    def test_k3(self, k3):
        assert reconstruct_hilbert_function(k3.deck(), 4) == [1, 3, 3, 3, 3]

    def test_small_deck_rejected(self):
        h = validate(["a", "b"], [["a", "b"]])
        with pytest.raises(TooFewVertices):
            reconstruct_hilbert_function(h.deck(), 4)


class TestReconstructBetti:
    def test_k3_partial_table(self, k3):
        table = reconstruct_multigraded_betti(k3.deck())
        assert not table.top_complete
        assert table.graded == {(0, 0): 1, (1, 2): 3}  # the (2,3) top entry is unknowable

    def test_matches_direct_below_top(self, k3, path3):
        for h in (k3, path3, wheel(5)):
            direct = hochster_betti(h)
            rec = reconstruct_multigraded_betti(h.deck())
            full = (1 << h.n) - 1
            expected = {k: v for k, v in direct.multigraded.items() if k[1] != full}
            assert rec.multigraded == expected

    def test_parallel_identical(self):
        h = wheel(5)
        seq = reconstruct_multigraded_betti(h.deck())
        par = reconstruct_multigraded_betti(h.deck(), parallel=True)
        assert seq.multigraded == par.multigraded


class TestTopBettiReport:
    def test_k3_determined(self, k3):
        rep = top_betti_report(k3)
        assert rep.determined
        assert rep.top_entries == {2: 2}
        assert rep.top_coefficient == 2
        assert (rep.projective_dimension, rep.regularity, rep.depth) == (2, 1, 1)

    def test_edgeless_trivially_determined(self, edgeless3):
        rep = top_betti_report(edgeless3)
        assert rep.determined and rep.top_entries == {} and rep.top_coefficient == 0

    def test_wheel_not_determined(self):
        rep = top_betti_report(wheel(5))
        assert not rep.determined
        assert rep.top_entries == {4: 1, 5: 1}
        # the alternating sum cancels, so the top row cannot be read off
        assert rep.top_coefficient == 0


@settings(max_examples=40, deadline=None)
@given(reconstructible_hypergraphs(max_n=5, max_m=5))
def test_roundtrip_properties(h):
    deck = h.deck()
    s_polys = [edge_induced_poly(c) for c in deck.cards]
    assert reconstruct_edge_poly(s_polys, h.n) == edge_induced_poly(h)
    p_polys = [vertex_induced_poly(c) for c in deck.cards]
    assert reconstruct_vertex_poly(p_polys, h.n) == vertex_induced_poly(h)
    assert reconstruct_f_vector(deck) == f_vector(h)
    assert reconstruct_hilbert_function(deck, h.n + 2) == hilbert_function(h, h.n + 2)


@settings(max_examples=40, deadline=None)
@given(reconstructible_hypergraphs(max_n=5, max_m=5))
def test_derived_invariants_from_reconstructed_f(h):
    from hgpoly.stanley_reisner import h_vector, krull_dim, multiplicity

    rec_f = reconstruct_f_vector(h.deck())
    d = len(rec_f) - 1
    assert d == krull_dim(h)
    assert rec_f[-1] == multiplicity(h)
    assert h_vector(rec_f, d) == h_vector(f_vector(h), krull_dim(h))


@settings(max_examples=40, deadline=None)
@given(reconstructible_hypergraphs(max_n=5, max_m=5))
def test_deck_constant_bookkeeping(h):
    # each card contributes exactly one empty edge subset
    total = sum(edge_induced_poly(c).coeff(0, 0) for c in h.deck().cards)
    assert total == h.n


@settings(max_examples=40, deadline=None)
@given(reconstructible_hypergraphs(max_n=5, max_m=5))
def test_deck_sum_identity_holds(h):
    assert verify_deck_sum_identity(h, "edge")
    assert verify_deck_sum_identity(h, "vertex")
