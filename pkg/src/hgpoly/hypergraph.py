"""Finite labeled hypergraphs (clutters) and their vertex-deleted decks.

A hypergraph is an ordered tuple of vertex labels together with a set of
distinct nonempty edges forming an antichain: no edge contains another.
Edges are stored internally as bitmasks over the vertex index range and
kept in a canonical order (lexicographic on sorted index tuples), so
equality is structural. Values are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    AntichainViolation,
    DuplicateEdge,
    DuplicateVertexLabel,
    EmptyEdge,
    IndexOutOfRange,
    InvalidDeck,
    ParseError,
    UnknownEdge,
    UnknownVertex,
)


def mask_indices(mask: int) -> tuple[int, ...]:
    """Set bit positions of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """Labeled hypergraph with an antichain edge set.

    Construct through :func:`validate` (label-level input) or
    :meth:`from_masks` (index-level input); both enforce the invariants.
    """

    labels: tuple[str, ...]
    edges: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lbl: k for k, lbl in enumerate(self.labels)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex index, the indices of edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e_idx, e in enumerate(self.edges):
            for v in mask_indices(e):
                inc[v].append(e_idx)
        return tuple(tuple(lst) for lst in inc)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @classmethod
    def from_masks(cls, labels: Sequence[str], edge_masks: Iterable[int]) -> "Hypergraph":
        """Build from edge bitmasks, canonicalizing order and checking
        the nonempty / duplicate-free / antichain invariants."""
        labels = tuple(labels)
        n = len(labels)
        masks = list(edge_masks)
        for e in masks:
            if e == 0:
                raise EmptyEdge("edge with no vertices")
            if e >> n:
                raise UnknownVertex(f"edge mask {e:#x} has bits outside the {n}-vertex range")
        masks.sort(key=mask_indices)
        for k in range(1, len(masks)):
            if masks[k] == masks[k - 1]:
                raise DuplicateEdge(f"duplicate edge {{{', '.join(labels[v] for v in mask_indices(masks[k]))}}}")
        for a in range(len(masks)):
            for b in range(len(masks)):
                if a != b and masks[a] & ~masks[b] == 0:
                    small = ", ".join(labels[v] for v in mask_indices(masks[a]))
                    big = ", ".join(labels[v] for v in mask_indices(masks[b]))
                    raise AntichainViolation(
                        f"edge {{{small}}} is contained in edge {{{big}}}"
                    )
        return cls(labels, tuple(masks))

    def mask_of(self, vertices: Iterable[str]) -> int:
        """Bitmask of a vertex subset given by labels.

        Raises UnknownVertex for labels outside the vertex set.
        """
        mask = 0
        idx = self.label_index
        for lbl in vertices:
            v = idx.get(lbl)
            if v is None:
                raise UnknownVertex(f"unknown vertex {lbl!r}")
            mask |= 1 << v
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in mask_indices(mask))

    def edge_label_sets(self) -> tuple[tuple[str, ...], ...]:
        """Edges as label tuples, in canonical order."""
        return tuple(self.labels_of(e) for e in self.edges)

    # -- induced substructures -------------------------------------------

    def vertex_induced(self, vertices: Iterable[str]) -> "Hypergraph":
        """Restriction to a vertex subset W: keeps exactly the edges
        contained in W."""
        wmask = self.mask_of(vertices)
        keep = [v for v in range(self.n) if wmask >> v & 1]
        new_labels = tuple(self.labels[v] for v in keep)
        position = {v: k for k, v in enumerate(keep)}
        new_edges = []
        for e in self.edges:
            if e & ~wmask == 0:
                new_edges.append(sum(1 << position[v] for v in mask_indices(e)))
        return Hypergraph.from_masks(new_labels, new_edges)

    def edge_union(self, edge_subset: Iterable[Iterable[str]]) -> tuple[str, ...]:
        """Union of the vertices covered by a subset of the edges.

        Each element must be an edge of this hypergraph (UnknownEdge
        otherwise). The empty subset gives the empty vertex set.
        """
        edge_set = set(self.edges)
        acc = 0
        for raw in edge_subset:
            mask = self.mask_of(raw)
            if mask not in edge_set:
                raise UnknownEdge(f"{{{', '.join(sorted(self.labels_of(mask)))}}} is not an edge")
            acc |= mask
        return self.labels_of(acc)

    def is_independent(self, vertices: Iterable[str]) -> bool:
        """True iff no edge is contained in the given vertex subset."""
        wmask = self.mask_of(vertices)
        return all(e & ~wmask for e in self.edges)

    # -- decks -------------------------------------------------------------

    def card(self, l: int) -> "Hypergraph":
        """Vertex-deleted card: drop vertex l and every edge containing it."""
        if not 0 <= l < self.n:
            raise IndexOutOfRange(f"vertex index {l} out of range 0..{self.n - 1}")
        keep = [v for v in range(self.n) if v != l]
        new_labels = tuple(self.labels[v] for v in keep)
        bit = 1 << l
        new_edges = []
        for e in self.edges:
            if e & bit:
                continue
            low = e & (bit - 1)
            high = e >> (l + 1)
            new_edges.append(low | high << l)
        return Hypergraph.from_masks(new_labels, new_edges)

    def deck(self) -> "Deck":
        """All n vertex-deleted cards, in vertex order."""
        return Deck(self.labels, tuple(self.card(l) for l in range(self.n)))

    # -- misc structure ------------------------------------------------------

    def connected_components(self) -> list["Hypergraph"]:
        """Partition by transitive edge co-membership; isolated vertices
        form singleton components. Components are ordered by their
        smallest vertex index."""
        parent = list(range(self.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            vs = mask_indices(e)
            for other in vs[1:]:
                ra, rb = find(vs[0]), find(other)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        comps = []
        for root in sorted(groups):
            comps.append(self.vertex_induced([self.labels[v] for v in groups[root]]))
        return comps

    def edge_ideal_generators(self) -> list[tuple[str, ...]]:
        """The edges as the minimal squarefree generating set of the
        associated monomial ideal (minimality is the antichain invariant)."""
        return list(self.edge_label_sets())

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.labels),
            "edges": [list(e) for e in self.edge_label_sets()],
        }

    def __repr__(self) -> str:
        edges = ", ".join("{" + ",".join(e) + "}" for e in self.edge_label_sets())
        return f"Hypergraph(vertices=[{', '.join(self.labels)}], edges=[{edges}])"


def validate(raw_vertices: Sequence[str], raw_edges: Iterable[Iterable[str]]) -> Hypergraph:
    """Checked construction from raw label data.

    Rejects duplicate vertex labels, empty edges, repeated labels inside
    an edge, unknown labels, byte-identical duplicate edges, and
    containment between distinct edges (reporting the witnessing pair).
    """
    labels = tuple(raw_vertices)
    seen: set[str] = set()
    for lbl in labels:
        if not isinstance(lbl, str):
            raise ParseError(f"vertex labels must be strings, got {lbl!r}")
        if lbl in seen:
            raise DuplicateVertexLabel(f"vertex label {lbl!r} appears twice")
        seen.add(lbl)
    index = {lbl: k for k, lbl in enumerate(labels)}
    masks = []
    for raw in raw_edges:
        edge_labels = list(raw)
        if not edge_labels:
            raise EmptyEdge("edge with no vertices")
        mask = 0
        for lbl in edge_labels:
            v = index.get(lbl)
            if v is None:
                raise UnknownVertex(f"edge {edge_labels!r} references unknown vertex {lbl!r}")
            if mask >> v & 1:
                raise DuplicateVertexLabel(f"edge {edge_labels!r} repeats vertex {lbl!r}")
            mask |= 1 << v
        masks.append(mask)
    return Hypergraph.from_masks(labels, masks)


@dataclass(frozen=True)
class Deck:
    """Ordered vertex-deleted deck: card l is the parent minus vertex l.

    Cards keep the parent's labels (minus the deleted one), which is
    what makes the reconstruction identities checkable without any
    isomorphism search.
    """

    parent_labels: tuple[str, ...]
    cards: tuple[Hypergraph, ...]

    def __post_init__(self) -> None:
        n = len(self.parent_labels)
        if len(self.cards) != n:
            raise InvalidDeck(f"expected {n} cards, got {len(self.cards)}")
        for l, card in enumerate(self.cards):
            expected = self.parent_labels[:l] + self.parent_labels[l + 1 :]
            if card.labels != expected:
                raise InvalidDeck(
                    f"card {l} has labels {card.labels}, expected {expected}"
                )

    @property
    def origin_n(self) -> int:
        return len(self.parent_labels)

    @classmethod
    def from_cards(cls, cards: Sequence[Hypergraph]) -> "Deck":
        """Recover the parent label order from the cards themselves.

        Card l omits exactly the parent's l-th label, so the first
        missing label is parent[0] and card 0 lists the rest in order.
        Requires at least two cards.
        """
        if len(cards) < 2:
            raise InvalidDeck("need at least two cards to recover the vertex order")
        first_missing = set(cards[1].labels) - set(cards[0].labels)
        if len(first_missing) != 1:
            raise InvalidDeck("cards 0 and 1 do not differ in exactly one label")
        parent = (next(iter(first_missing)),) + cards[0].labels
        return cls(parent, tuple(cards))


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    """Disjoint union on label-disjoint hypergraphs.

    Raises DuplicateVertexLabel if the label sets overlap.
    """
    overlap = set(a.labels) & set(b.labels)
    if overlap:
        raise DuplicateVertexLabel(f"label sets overlap: {sorted(overlap)}")
    labels = a.labels + b.labels
    edges = list(a.edges) + [e << a.n for e in b.edges]
    return Hypergraph.from_masks(labels, edges)
