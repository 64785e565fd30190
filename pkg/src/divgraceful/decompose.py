"""Cyclic decompositions of K_{(m+1) x 2dn} from d-divisible alpha-labelings.

Vertices of the multipartite graph are Z_v with v = (m+1) * 2dn and parts
the residue classes mod m+1, so "cyclic" means invariant under u -> u + 1.
Base block j copies the labeling with the high part pushed up by
j * d(m+1); the n blocks then realise every admissible difference once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import LabelingError
from .graphs import MultipartiteSpec, OrderedBipartiteGraph, multipartite_edges
from .labeling import Labeling, Report, verify_d_divisible

Edge = tuple[int, int]


@dataclass(frozen=True)
class BaseBlock:
    edges: tuple[Edge, ...]
    j: int = 0
    source: Labeling | None = field(default=None, compare=False, repr=False)

    def translate(self, shift: int, v: int) -> tuple[Edge, ...]:
        return tuple(((a + shift) % v, (b + shift) % v) for a, b in self.edges)

    def differences(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            diff = (b - a) % v
            out.append(min(diff, v - diff))
        return out


@dataclass
class Decomposition:
    v: int
    part_count: int
    n: int
    base_blocks: list[BaseBlock]
    developed: list[tuple[Edge, ...]] | None = None
    provenance: str | None = None
    certificate: dict | None = None

    @property
    def part_size(self) -> int:
        return self.v // self.part_count

    @property
    def block_count(self) -> int:
        return self.v * len(self.base_blocks)

    @property
    def host(self) -> MultipartiteSpec:
        return MultipartiteSpec(self.part_count, self.part_size)

    def iter_blocks(self) -> Iterator[tuple[Edge, ...]]:
        if self.developed is not None:
            yield from self.developed
            return
        for block in self.base_blocks:
            for shift in range(self.v):
                yield block.translate(shift, self.v)


def _low_high(l: Labeling) -> tuple[range, range]:
    g = l.host
    if max(l.side_values("A")) < min(l.side_values("B")):
        return g.vertices_a, g.vertices_b
    return g.vertices_b, g.vertices_a


def base_blocks(l: Labeling, n: int = 1, d: int | None = None) -> list[BaseBlock]:
    """The n base blocks of the difference family carried by ``l``.

    For n = 1 a d-divisible graceful labeling suffices; n > 1 needs the
    alpha separation so the high part can be shifted.
    """
    d = d if d is not None else l.d
    if d is None:
        raise LabelingError("invalid-request", "the labeling carries no d; pass it explicitly")
    if n < 1:
        raise LabelingError("invalid-request", f"n must be positive, got {n}")
    g = l.host
    report = verify_d_divisible(l, d, require_alpha=n > 1)
    if not report.holds:
        raise LabelingError("invalid-labeling", f"not a {d}-divisible labeling: {report.failures}")
    m = g.size // d
    v = (m + 1) * 2 * d * n
    step = d * (m + 1)
    blocks = []
    if n == 1:
        blocks.append(BaseBlock(tuple((l[a], l[b]) for a, b in g.edges), 0, l))
        return blocks
    _, high = _low_high(l)
    high_set = set(high)
    for j in range(n):
        def image(x: int) -> int:
            return (l[x] + j * step) % v if x in high_set else l[x]
        blocks.append(BaseBlock(tuple((image(a), image(b)) for a, b in g.edges), j, l))
    return blocks


def develop(blocks: Sequence[BaseBlock], v: int, part_count: int, materialize: bool = True) -> Decomposition:
    """All v translates of every base block."""
    dec = Decomposition(v, part_count, len(blocks), list(blocks))
    if materialize:
        dec.developed = [b.translate(s, v) for b in blocks for s in range(v)]
    return dec


def decompose(l: Labeling, n: int = 1, d: int | None = None, materialize: bool = True) -> Decomposition:
    d = d if d is not None else l.d
    blocks = base_blocks(l, n, d)
    m = l.host.size // d
    dec = develop(blocks, (m + 1) * 2 * d * n, m + 1, materialize)
    dec.provenance = f"cyclic development of a {d}-divisible labeling, n={n}"
    return dec


def _vertex_map(block: Sequence[Edge], gamma: OrderedBipartiteGraph) -> tuple[dict[int, int], str | None]:
    """Recover the vertex map Gamma -> Z_v; report the first inconsistency."""
    if len(block) != gamma.size:
        return {}, f"block has {len(block)} edges, Gamma has {gamma.size}"
    phi: dict[int, int] = {}
    for (a, b), (u, w) in zip(gamma.edges, block):
        for x, img in ((a, u), (b, w)):
            if phi.setdefault(x, img) != img:
                return phi, f"{gamma.names[x]} sent to both {phi[x]} and {img}"
    if len(set(phi.values())) != len(phi):
        return phi, "two vertices of Gamma share an image"
    return phi, None


def _norm(e: Edge) -> Edge:
    return (e[0], e[1]) if e[0] <= e[1] else (e[1], e[0])


def verify_decomposition(dec: Decomposition, gamma: OrderedBipartiteGraph) -> Report:
    """Check (i) blocks are injective images of Gamma, (ii) edges cross parts,
    (iii) the blocks partition the edges of the multipartite graph and
    (iv) the block set is invariant under +1.
    """
    report = Report()
    v, q = dec.v, dec.part_count
    if v % q:
        report.fail("bad-modulus", f"v={v} is not a multiple of the part count {q}")
        return report
    counts: Counter[Edge] = Counter()
    block_set: set[frozenset[Edge]] = set()
    blocks = 0
    for block in dec.iter_blocks():
        blocks += 1
        _, problem = _vertex_map(block, gamma)
        if problem:
            report.fail("not-injective", f"block {blocks - 1}: {problem}")
        for a, b in block:
            if not (0 <= a < v and 0 <= b < v):
                report.fail("out-of-range", f"block {blocks - 1}: edge ({a}, {b}) outside Z_{v}")
            elif (a - b) % q == 0:
                report.fail("same-part", f"block {blocks - 1}: edge ({a}, {b}) inside a part")
        edges = [_norm(e) for e in block]
        counts.update(edges)
        block_set.add(frozenset(edges))
    if blocks != dec.block_count:
        report.fail("block-count", f"{blocks} blocks, expected {dec.block_count}")

    target = set(multipartite_edges(dec.host))
    repeated = sorted(e for e, k in counts.items() if k > 1)
    extra = sorted(e for e in counts if e not in target)
    missing = sorted(e for e in target if e not in counts)
    if repeated or extra or missing:
        report.fail(
            "not-a-partition",
            f"repeated {repeated[:5]}, extra {extra[:5]}, missing {missing[:5]}"
            f" ({len(repeated)}, {len(extra)}, {len(missing)} in total)",
        )
    shifted = {frozenset(_norm(((a + 1) % v, (b + 1) % v)) for a, b in blk) for blk in block_set}
    if shifted != block_set:
        report.fail("not-cyclic", "translating by +1 does not permute the blocks")
    return report


def certificate(dec: Decomposition, gamma: OrderedBipartiteGraph) -> dict:
    rep = verify_decomposition(dec, gamma)
    return {
        "holds": rep.holds,
        "failures": rep.failures,
        "v": dec.v,
        "partCount": dec.part_count,
        "partSize": dec.part_size,
        "n": dec.n,
        "blockCount": dec.block_count,
        "edgeCount": dec.block_count * gamma.size,
        "targetEdgeCount": dec.host.edge_count,
    }
