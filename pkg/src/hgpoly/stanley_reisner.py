"""Stanley-Reisner invariants of the independence complex.

Everything here is derived from two exact sources: the independence
polynomial (face counts by size) and the edge-subset polynomial
specialized at y = -1, which is the numerator of the Hilbert series of
the quotient by the edge ideal over n variables.

The Hilbert function is computed along two independent routes and the
results are compared; a disagreement raises InternalMismatch because it
can only come from a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bipoly import UniPoly, divide_by_one_minus_t, expand_series
from .enumeration import edge_induced_poly, independence_poly
from .errors import InternalMismatch, LengthMismatch
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class SRInvariants:
    """Bundle of ring invariants: face vector (leading 1 for the empty
    face), its binomial transform h, Krull dimension, multiplicity, the
    Hilbert series numerator, and the ambient variable count."""

    f: tuple[int, ...]
    h: tuple[int, ...]
    krull_dim: int
    multiplicity: int
    k_polynomial: UniPoly
    n: int


def f_vector(h: Hypergraph, limit: int | None = None) -> tuple[int, ...]:
    """Face counts of the independence complex by size, starting with
    the empty set: entry l is the number of independent l-subsets."""
    return independence_poly(h, limit).coeffs


def krull_dim(h: Hypergraph, limit: int | None = None) -> int:
    """Largest independent-set size."""
    return len(f_vector(h, limit)) - 1


def multiplicity(h: Hypergraph, limit: int | None = None) -> int:
    """Number of independent sets of maximum size."""
    return f_vector(h, limit)[-1]


def h_vector(f: tuple[int, ...] | list[int], d: int) -> tuple[int, ...]:
    """Binomial transform of a face vector of a (d-1)-dimensional
    complex: the coefficients of sum_i f[i] t^i (1-t)^(d-i).

    Raises LengthMismatch unless len(f) == d + 1.
    """
    if len(f) != d + 1:
        raise LengthMismatch(f"f-vector of length {len(f)} does not match dimension argument d={d}")
    out = [0] * (d + 1)
    for i, fi in enumerate(f):
        for k in range(i, d + 1):
            sign = -1 if (k - i) & 1 else 1
            out[k] += fi * comb(d - i, k - i) * sign
    return tuple(out)


def k_polynomial(h: Hypergraph, limit: int | None = None) -> UniPoly:
    """Numerator of the Hilbert series over (1-t)^n: the edge-subset
    polynomial evaluated at y = -1."""
    return edge_induced_poly(h, limit).eval_y(-1)


def hilbert_function(h: Hypergraph, k_max: int, limit: int | None = None) -> list[int]:
    """Graded dimensions dim R_k for k = 0..k_max, where R is the
    quotient of the n-variable polynomial ring by the edge ideal.

    Two independent routes are used: series expansion of the Hilbert
    series numerator over (1-t)^n, and the face-count formula
    dim R_k = sum_i f[i] * C(k-1, i-1) for k >= 1. InternalMismatch is
    raised if they disagree.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    via_series = expand_series(k_polynomial(h, limit), h.n, k_max)
    f = f_vector(h, limit)
    via_faces = [1] + [
        sum(f[i] * comb(k - 1, i - 1) for i in range(1, len(f)))
        for k in range(1, k_max + 1)
    ]
    if via_series != via_faces:
        raise InternalMismatch(
            f"Hilbert function routes disagree: series {via_series} vs face counts {via_faces}"
        )
    return via_series


def hilbert_series_reduced(h: Hypergraph, limit: int | None = None) -> tuple[UniPoly, int]:
    """The Hilbert series in lowest (1-t)-terms: returns (numerator, d)
    with the series equal to numerator / (1-t)^d and numerator(1) the
    multiplicity."""
    num = k_polynomial(h, limit)
    d = krull_dim(h, limit)
    for _ in range(h.n - d):
        num = divide_by_one_minus_t(num)
    return num, d


def exterior_face_poly(h: Hypergraph, limit: int | None = None) -> UniPoly:
    """Hilbert polynomial of the further quotient by all variable
    squares; its coefficients are exactly the face counts."""
    return independence_poly(h, limit)


def sr_invariants(h: Hypergraph, limit: int | None = None) -> SRInvariants:
    f = f_vector(h, limit)
    d = len(f) - 1
    return SRInvariants(
        f=f,
        h=h_vector(f, d),
        krull_dim=d,
        multiplicity=f[-1],
        k_polynomial=k_polynomial(h, limit),
        n=h.n,
    )
