"""Caterpillars, hairy cycles, coronas, cycles and complete multipartite graphs.

A caterpillar is described by its pendant counts ``[n_1, m_1, ..., n_t, m_t]``
along the spine ``x_1, y_1, ..., x_t, y_t``.  Spine position ``p`` (0-based)
holds ``x_{p//2+1}`` when ``p`` is even and ``y_{p//2+1}`` when ``p`` is odd.
An odd-length sequence simply stops at ``x_t`` (no ``y_t``).

Vertex ids are dense integers: part A in canonical order first, then part B.
Part A is ``x_1, y_1^1..y_1^{m_1}, x_2, ...`` and part B is
``x_1^1..x_1^{n_1}, y_1, x_2^1, ...``.  Edges run ``[x_1, x_1^1], ...,
[x_1, y_1], [y_1, y_1^1], ..., [y_1, x_2], ...`` with the closing edge
``[x_1, y_t]`` of a hairy cycle or cycle appended last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import LabelingError

CATERPILLAR = "caterpillar"
HAIRY_CYCLE = "hairy-cycle"
CYCLE = "cycle"
KINDS = (CATERPILLAR, HAIRY_CYCLE, CYCLE, "generic")


def _check_pendants(pendants: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(int(p) for p in pendants)
    if not seq:
        raise LabelingError("invalid-spec", "pendant sequence is empty")
    if any(p < 0 for p in seq):
        raise LabelingError("invalid-spec", f"negative pendant count in {list(seq)}")
    return seq


@dataclass(frozen=True)
class CaterpillarSpec:
    pendants: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pendants", _check_pendants(self.pendants))

    @property
    def t(self) -> int:
        return (len(self.pendants) + 1) // 2

    @property
    def spine_edges(self) -> int:
        return len(self.pendants) - 1

    @property
    def size(self) -> int:
        return self.spine_edges + sum(self.pendants)


@dataclass(frozen=True)
class OrderedBipartiteGraph:
    """A caterpillar-shaped bipartite graph with the canonical orders.

    ``spine[p]`` is the id of the spine vertex at position ``p`` and
    ``leaves[p]`` the ids of its pendant vertices, in order.
    """

    pendants: tuple[int, ...]
    kind: str
    names: tuple[str, ...]
    n_a: int
    edges: tuple[tuple[int, int], ...]
    spine: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]
    closing_edge_index: int | None = None
    lam: int | None = field(default=None, compare=False)

    # -- parts -------------------------------------------------------------
    @property
    def vertices_a(self) -> range:
        return range(self.n_a)

    @property
    def vertices_b(self) -> range:
        return range(self.n_a, len(self.names))

    @property
    def num_vertices(self) -> int:
        return len(self.names)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def t(self) -> int:
        return (len(self.pendants) + 1) // 2

    @property
    def k(self) -> int:
        """|B|, the quantity driving the closing-edge arithmetic."""
        return len(self.names) - self.n_a

    def in_a(self, v: int) -> bool:
        return v < self.n_a

    # -- 1-based accessors (x_i, y_i) --------------------------------------
    def n(self, i: int) -> int:
        return self.pendants[2 * (i - 1)]

    def m(self, i: int) -> int:
        p = 2 * i - 1
        return self.pendants[p] if p < len(self.pendants) else 0

    def x(self, i: int) -> int:
        return self.spine[2 * (i - 1)]

    def y(self, i: int) -> int:
        return self.spine[2 * i - 1]

    def xp(self, i: int, j: int) -> int:
        """The j-th pendant vertex hanging from x_i."""
        return self.leaves[2 * (i - 1)][j - 1]

    def yp(self, i: int, j: int) -> int:
        return self.leaves[2 * i - 1][j - 1]

    @property
    def has_y_t(self) -> bool:
        return len(self.pendants) % 2 == 0

    def edge_index(self, u: int, w: int) -> int:
        key = (u, w) if u < self.n_a else (w, u)
        return self._edge_lookup()[key]

    def _edge_lookup(self) -> dict[tuple[int, int], int]:
        cache = self.__dict__.get("_edge_cache")
        if cache is None:
            cache = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_cache", cache)
        return cache

    def prefix_vertices(self, last_pos: int) -> list[int]:
        """Spine vertices at positions <= last_pos together with their leaves."""
        out: list[int] = []
        for p in range(last_pos + 1):
            out.append(self.spine[p])
            out.extend(self.leaves[p])
        return out

    def open_caterpillar(self) -> "OrderedBipartiteGraph":
        """Drop the closing edge; vertex ids are unchanged."""
        if self.closing_edge_index is None:
            return self
        return build_caterpillar(CaterpillarSpec(self.pendants))

    def closed(self) -> "OrderedBipartiteGraph":
        """Add the closing edge [x_1, y_t] to an even-length caterpillar."""
        if self.closing_edge_index is not None:
            return self
        if any(self.pendants):
            return build_hairy_cycle(CaterpillarSpec(self.pendants))
        return build_cycle(len(self.pendants))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.names]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def _layout(pendants: tuple[int, ...]):
    """Names in A-order and B-order plus the edge list expressed by names."""
    a_names: list[str] = []
    b_names: list[str] = []
    spine_names: list[str] = []
    leaf_names: list[list[str]] = []
    for p, count in enumerate(pendants):
        letter = "x" if p % 2 == 0 else "y"
        i = p // 2 + 1
        own = f"{letter}{i}"
        leaves = [f"{letter}{i}^{j}" for j in range(1, count + 1)]
        spine_names.append(own)
        leaf_names.append(leaves)
        if p % 2 == 0:
            a_names.append(own)
            b_names.extend(leaves)
        else:
            a_names.extend(leaves)
            b_names.append(own)
    return a_names, b_names, spine_names, leaf_names


def _assemble(pendants: tuple[int, ...], kind: str, closing: bool) -> OrderedBipartiteGraph:
    a_names, b_names, spine_names, leaf_names = _layout(pendants)
    names = tuple(a_names + b_names)
    ids = {name: i for i, name in enumerate(names)}
    n_a = len(a_names)

    def oriented(u: int, w: int) -> tuple[int, int]:
        return (u, w) if u < n_a else (w, u)

    spine = tuple(ids[s] for s in spine_names)
    leaves = tuple(tuple(ids[v] for v in group) for group in leaf_names)
    edges: list[tuple[int, int]] = []
    for p in range(len(pendants)):
        for leaf in leaves[p]:
            edges.append(oriented(spine[p], leaf))
        if p + 1 < len(pendants):
            edges.append(oriented(spine[p], spine[p + 1]))
    closing_index = None
    if closing:
        edges.append(oriented(spine[0], spine[-1]))
        closing_index = len(edges) - 1
    return OrderedBipartiteGraph(
        pendants=pendants,
        kind=kind,
        names=names,
        n_a=n_a,
        edges=tuple(edges),
        spine=spine,
        leaves=leaves,
        closing_edge_index=closing_index,
    )


def build_caterpillar(spec: CaterpillarSpec | Sequence[int]) -> OrderedBipartiteGraph:
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    return _assemble(spec.pendants, CATERPILLAR, closing=False)


def build_hairy_cycle(spec: CaterpillarSpec | Sequence[int]) -> OrderedBipartiteGraph:
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    seq = spec.pendants
    if len(seq) % 2 == 1:
        raise LabelingError(
            "non-bipartite-unsupported", "odd-length pendant sequence gives an odd cycle"
        )
    if len(seq) < 4:
        raise LabelingError("invalid-spec", "a hairy cycle needs t >= 2")
    if not any(seq):
        raise LabelingError("invalid-spec", "no pendant edges: this is a cycle, not a hairy cycle")
    return _assemble(seq, HAIRY_CYCLE, closing=True)


def build_corona(t: int, lam: int) -> OrderedBipartiteGraph:
    """H(2t, lambda): the cycle C_2t with lambda pendants on every vertex."""
    if t < 2 or lam < 1:
        raise LabelingError("invalid-spec", f"corona needs t >= 2 and lambda >= 1, got ({t}, {lam})")
    g = build_hairy_cycle([lam] * (2 * t))
    object.__setattr__(g, "lam", lam)
    return g


def build_cycle(k_edges: int) -> OrderedBipartiteGraph:
    if k_edges % 2 == 1:
        raise LabelingError("non-bipartite-unsupported", f"C_{k_edges} is an odd cycle")
    if k_edges < 4:
        raise LabelingError("invalid-spec", f"cycle length must be at least 4, got {k_edges}")
    return _assemble((0,) * k_edges, CYCLE, closing=True)


def graph_from_spec(kind: str, pendants: Sequence[int], lam: int | None = None) -> OrderedBipartiteGraph:
    if kind == CATERPILLAR:
        return build_caterpillar(pendants)
    if kind == CYCLE:
        if any(pendants):
            raise LabelingError("invalid-spec", "a cycle has no pendant edges")
        return build_cycle(len(pendants))
    if kind == HAIRY_CYCLE:
        if lam is not None:
            if len(set(pendants)) != 1 or pendants[0] != lam:
                raise LabelingError("invalid-spec", "corona pendants must all equal lambda")
            return build_corona(len(pendants) // 2, lam)
        return build_hairy_cycle(pendants)
    raise LabelingError("invalid-spec", f"unknown graph kind {kind!r}")


# -- re-representation of hairy cycles ----------------------------------------

def _orbit_sequence(seq: tuple[int, ...], rotation: int, reflect: bool) -> tuple[int, ...]:
    if reflect:
        seq = seq[::-1]
    r = rotation % len(seq)
    return seq[r:] + seq[:r]


def rerepresent_hairy(g: OrderedBipartiteGraph, rotation: int, reflect: bool = False) -> CaterpillarSpec:
    """Describe the same hairy cycle starting the cycle walk elsewhere.

    The cycle is read from the spine position ``rotation`` (after reversing
    the walk if ``reflect``).  All ``4t`` representations are reachable.
    """
    if g.kind != HAIRY_CYCLE:
        raise LabelingError("wrong-kind", f"expected a hairy cycle, got {g.kind}")
    return CaterpillarSpec(_orbit_sequence(g.pendants, rotation, reflect))


def rerepresentation_map(
    g: OrderedBipartiteGraph, h: OrderedBipartiteGraph, rotation: int, reflect: bool
) -> list[int]:
    """Vertex correspondence: ``result[v_h] = v_g`` for ``h = rerepresent(g)``."""
    size = len(g.pendants)
    order = list(range(size))
    if reflect:
        order = order[::-1]
    r = rotation % size
    order = order[r:] + order[:r]
    mapping = [0] * h.num_vertices
    for new_pos, old_pos in enumerate(order):
        mapping[h.spine[new_pos]] = g.spine[old_pos]
        for new_leaf, old_leaf in zip(h.leaves[new_pos], g.leaves[old_pos]):
            mapping[new_leaf] = old_leaf
    return mapping


def canonical_hairy_form(pendants: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least sequence in the rotation/reflection orbit."""
    seq = tuple(pendants)
    return min(
        _orbit_sequence(seq, r, refl) for r in range(len(seq)) for refl in (False, True)
    )


# -- complete multipartite graphs -----------------------------------------------

@dataclass(frozen=True)
class MultipartiteSpec:
    part_count: int
    part_size: int

    def __post_init__(self) -> None:
        if self.part_count < 1 or self.part_size < 1:
            raise LabelingError("invalid-spec", "part count and size must be positive")

    @property
    def v(self) -> int:
        return self.part_count * self.part_size

    @property
    def edge_count(self) -> int:
        return self.v * (self.v - self.part_size) // 2


def multipartite_edges(spec: MultipartiteSpec) -> Iterator[tuple[int, int]]:
    """Pairs ``(u, w)``, ``u < w``, of Z_v lying in different residue classes."""
    q = spec.part_count
    for u, w in combinations(range(spec.v), 2):
        if (w - u) % q:
            yield (u, w)
