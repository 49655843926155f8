"""Cross-checking identity suite.

Each check recomputes both sides of an exact identity along independent
routes and returns True only on coefficientwise equality. The CLI binds
them to the identity ids ``2.1``, ``2.3``, ``3.2``, ``4.2``, ``4.3``;
a False from any of them on a valid input means a bug somewhere, which
is the point of running them.
"""

from __future__ import annotations

from math import comb

from .bipoly import UniPoly, to_edge_form
from .enumeration import edge_induced_poly, vertex_induced_poly
from .errors import LimitExceeded, NotReconstructible
from .homology import verify_betti_alternating_sum
from .hypergraph import Hypergraph
from .reconstruct import verify_deck_sum_identity
from .stanley_reisner import f_vector, k_polynomial

IDENTITY_IDS = ("2.1", "2.3", "3.2", "4.2", "4.3")


def verify_transform(h: Hypergraph, limit: int | None = None) -> bool:
    """Binomial-expansion transform of the vertex polynomial equals the
    directly enumerated edge polynomial."""
    p = vertex_induced_poly(h, limit)
    s = edge_induced_poly(h, limit)
    return to_edge_form(p, h.n) == s


def verify_coefficient_relation(h: Hypergraph, limit: int | None = None) -> bool:
    """Binomial coefficient relation linking the two coefficient tables:
    for all (i, j),

        sum_{l >= 0} beta[i, j+l] * C(j+l, j)
            == sum_{l = 0..i} theta[i-l, j] * C(n-(i-l), l).

    Both sides count pairs (W, K) with |W| = i and K a j-element subset
    of the edges inside W: the left side picks K among the edges each W
    induces, the right side extends the union of each j-edge subset by
    arbitrary extra vertices. The left sum runs over every l with a
    nonzero coefficient (an i-set can induce far more than i edges)."""
    p = vertex_induced_poly(h, limit)
    s = edge_induced_poly(h, limit)
    n = h.n
    j_max = max(p.deg_y(), s.deg_y(), 0)
    for i in range(n + 1):
        for j in range(j_max + 1):
            lhs = sum(p.coeff(i, j + l) * comb(j + l, j) for l in range(j_max - j + 1))
            rhs = sum(s.coeff(i - l, j) * comb(n - (i - l), l) for l in range(i + 1))
            if lhs != rhs:
                return False
    return True


def verify_series_numerator(h: Hypergraph, limit: int | None = None) -> bool:
    """The edge polynomial at y = -1 equals the face-count expansion
    sum_i f[i] t^i (1-t)^(n-i)."""
    f = f_vector(h, limit)
    one_minus_t = UniPoly.one_minus_t()
    rhs = UniPoly()
    for i, fi in enumerate(f):
        rhs = rhs + fi * (UniPoly.monomial(i) * one_minus_t ** (h.n - i))
    return k_polynomial(h, limit) == rhs


def verify_deck_sums(h: Hypergraph, limit: int | None = None) -> bool:
    """Deck-sum identity for both polynomials; raises NotReconstructible
    on excluded inputs."""
    return verify_deck_sum_identity(h, "edge", limit) and verify_deck_sum_identity(
        h, "vertex", limit
    )


def run_identity(identity: str, h: Hypergraph, limit: int | None = None, homology_limit: int | None = None, parallel: bool = False) -> bool:
    if identity == "2.1":
        return verify_transform(h, limit)
    if identity == "2.3":
        return verify_coefficient_relation(h, limit)
    if identity == "3.2":
        return verify_series_numerator(h, limit)
    if identity == "4.2":
        return verify_deck_sums(h, limit)
    if identity == "4.3":
        return verify_betti_alternating_sum(h, homology_limit, parallel)
    raise ValueError(f"unknown identity {identity!r}")


def run_all(h: Hypergraph, limit: int | None = None, homology_limit: int | None = None, parallel: bool = False) -> dict[str, bool | str]:
    """Run the whole suite; identities whose preconditions exclude the
    input (or whose size limits refuse it) are reported as a
    'skipped: ...' string instead of a bool."""
    results: dict[str, bool | str] = {}
    for identity in IDENTITY_IDS:
        try:
            results[identity] = run_identity(identity, h, limit, homology_limit, parallel)
        except (NotReconstructible, LimitExceeded) as exc:
            results[identity] = f"skipped: {exc}"
    return results
