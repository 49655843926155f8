"""Independent brute-force reference implementations.

Everything here deliberately avoids the library's bitmask and Gray-code
machinery: subsets are walked with itertools over label tuples, ranks
are computed with Fraction Gaussian elimination, and the Betti oracle
loops over all 2^n vertex subsets instead of the edge-union closure.
Agreement between these and the production code is what the property
tests assert.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from hgpoly.hypergraph import Hypergraph


def naive_vertex_poly(h: Hypergraph) -> dict[tuple[int, int], int]:
    """(|W|, #edges inside W) tallies via itertools.combinations."""
    edges = [set(e) for e in h.edge_label_sets()]
    counts: dict[tuple[int, int], int] = {}
    for size in range(h.n + 1):
        for combo in combinations(h.labels, size):
            w = set(combo)
            inside = sum(1 for e in edges if e <= w)
            key = (size, inside)
            counts[key] = counts.get(key, 0) + 1
    return counts


def naive_edge_poly(h: Hypergraph) -> dict[tuple[int, int], int]:
    """(|union of L|, |L|) tallies over all edge subsets."""
    edges = [set(e) for e in h.edge_label_sets()]
    counts: dict[tuple[int, int], int] = {}
    for size in range(h.m + 1):
        for combo in combinations(range(h.m), size):
            union: set[str] = set()
            for k in combo:
                union |= edges[k]
            key = (len(union), size)
            counts[key] = counts.get(key, 0) + 1
    return counts


def naive_independent_sizes(h: Hypergraph) -> list[int]:
    """Counts of independent sets by size, trailing zeros trimmed."""
    edges = [set(e) for e in h.edge_label_sets()]
    counts = [0] * (h.n + 1)
    for size in range(h.n + 1):
        for combo in combinations(h.labels, size):
            w = set(combo)
            if not any(e <= w for e in edges):
                counts[size] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def rank_over_rationals(rows: list[list[int]]) -> int:
    """Plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def naive_reduced_homology(faces: list[frozenset[str]]) -> list[int]:
    """Reduced homology dimensions from label-set faces, degrees -1 up,
    using the Fraction rank above. Void input gives []."""
    if not faces:
        return []
    by_dim: dict[int, list[frozenset[str]]] = {}
    for f in faces:
        by_dim.setdefault(len(f), []).append(f)
    top = max(by_dim)
    groups = [sorted(by_dim.get(k, []), key=sorted) for k in range(top + 1)]

    def boundary(upper: list[frozenset[str]], lower: list[frozenset[str]]) -> list[list[int]]:
        index = {f: i for i, f in enumerate(lower)}
        rows = [[0] * len(upper) for _ in lower]
        for col, f in enumerate(upper):
            for t, v in enumerate(sorted(f)):
                rows[index[f - {v}]][col] = (-1) ** t
        return rows

    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        if groups[k] and groups[k - 1]:
            ranks[k] = rank_over_rationals(boundary(groups[k], groups[k - 1]))
    return [len(groups[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def naive_independence_faces(h: Hypergraph, within: set[str] | None = None) -> list[frozenset[str]]:
    ground = sorted(within) if within is not None else list(h.labels)
    edges = [set(e) for e in h.edge_label_sets()]
    faces = []
    for size in range(len(ground) + 1):
        for combo in combinations(ground, size):
            w = set(combo)
            if not any(e <= w for e in edges):
                faces.append(frozenset(combo))
    return faces


def naive_betti_table(h: Hypergraph) -> dict[tuple[int, tuple[str, ...]], int]:
    """Multigraded table by looping over every vertex subset B."""
    table: dict[tuple[int, tuple[str, ...]], int] = {(0, ()): 1}
    for size in range(1, h.n + 1):
        for combo in combinations(h.labels, size):
            faces = naive_independence_faces(h, set(combo))
            dims = naive_reduced_homology(faces)
            for i in range(1, size + 1):
                deg = size - i - 1
                if 0 <= deg + 1 < len(dims) and dims[deg + 1]:
                    table[(i, tuple(combo))] = dims[deg + 1]
    return table
