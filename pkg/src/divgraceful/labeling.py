"""Labelings, label sets and the predicates they must satisfy."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import LabelingError
from .graphs import CATERPILLAR, OrderedBipartiteGraph


@dataclass(frozen=True)
class LabelSet:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if any(v < 1 for v in vals):
            raise LabelingError("invalid-spec", "label sets hold positive integers")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise LabelingError("invalid-spec", "label set must be strictly ascending")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, values: Iterable[int]) -> "LabelSet":
        return cls(tuple(sorted(set(values))))

    @property
    def max_value(self) -> int:
        return self.values[-1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, x: object) -> bool:
        return x in set(self.values)

    def without(self, c: int) -> "LabelSet":
        if c not in self:
            raise LabelingError("invalid-spec", f"{c} is not in the label set")
        return LabelSet(tuple(v for v in self.values if v != c))


def _admissible(e: int, d: int) -> int:
    if e < 1 or d < 1 or e % d:
        raise LabelingError("not-admissible", f"d={d} does not divide e={e}")
    return e // d


def divisible_label_set(e: int, d: int) -> LabelSet:
    """{1, ..., d(m+1)-1} without the multiples of m+1, where e = d*m."""
    m = _admissible(e, d)
    return LabelSet(tuple(v for v in range(1, d * (m + 1)) if v % (m + 1)))


@dataclass(frozen=True)
class DivisibilityParams:
    e: int
    d: int
    c: int | None = None
    c1: int | None = None
    c2: int | None = None
    k: int | None = None
    d_a: int | None = None
    d_b: int | None = None

    def __post_init__(self) -> None:
        _admissible(self.e, self.d)
        if self.c is not None and self.c not in self.allowed:
            raise LabelingError("invalid-spec", f"c={self.c} is not in the divisible label set")

    @property
    def m(self) -> int:
        return self.e // self.d

    @property
    def delta(self) -> range:
        return range(1, self.e + self.d)

    @property
    def delta_prime(self) -> tuple[int, ...]:
        return tuple(i * (self.m + 1) for i in range(1, self.d))

    @property
    def allowed(self) -> LabelSet:
        return divisible_label_set(self.e, self.d)

    @property
    def top_label(self) -> int:
        return self.d * (self.m + 1) - 1


@dataclass(frozen=True)
class Labeling:
    """Vertex values indexed by vertex id of ``host``.

    ``provenance`` and ``meta`` record how the labeling was produced; they
    take no part in equality.
    """

    host: OrderedBipartiteGraph
    values: tuple[int, ...]
    d: int | None = None
    provenance: str | None = field(default=None, compare=False)
    meta: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if len(vals) != self.host.num_vertices:
            raise LabelingError(
                "size-mismatch",
                f"{len(vals)} values for {self.host.num_vertices} vertices",
            )
        object.__setattr__(self, "values", vals)

    @property
    def assignment(self) -> dict[int, int]:
        return dict(enumerate(self.values))

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    @property
    def edge_differences(self) -> tuple[int, ...]:
        f = self.values
        return tuple(abs(f[a] - f[b]) for a, b in self.host.edges)

    def side_values(self, side: str) -> list[int]:
        verts = self.host.vertices_a if side == "A" else self.host.vertices_b
        return [self.values[v] for v in verts]

    def replace(self, values: Sequence[int], **kw) -> "Labeling":
        kw.setdefault("d", self.d)
        kw.setdefault("provenance", self.provenance)
        kw.setdefault("meta", dict(self.meta))
        return Labeling(kw.pop("host", self.host), tuple(values), **kw)


@dataclass
class Report:
    holds: bool = True
    failures: list[dict] = field(default_factory=list)

    def fail(self, code: str, detail: str) -> None:
        self.holds = False
        self.failures.append({"code": code, "detail": detail})

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {"holds": self.holds, "failures": list(self.failures)}


# -- construction ------------------------------------------------------------

def standard_alpha_s(g: OrderedBipartiteGraph, s: LabelSet | Sequence[int]) -> Labeling:
    """Assign S ascending along the edge order and anchor the last A vertex at 0.

    Every edge [a, b] then satisfies f(b) - f(a) = its label; values are
    propagated through the tree from the anchor.
    """
    if g.kind != CATERPILLAR:
        raise LabelingError("wrong-kind", f"standard labeling needs a caterpillar, got {g.kind}")
    if not isinstance(s, LabelSet):
        s = LabelSet(tuple(s))
    if len(s) != g.size:
        raise LabelingError("size-mismatch", f"|S|={len(s)} but the caterpillar has {g.size} edges")

    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for (a, b), label in zip(g.edges, s.values):
        adj[a].append((b, label))
        adj[b].append((a, -label))
    values: list[int | None] = [None] * g.num_vertices
    anchor = g.n_a - 1
    values[anchor] = 0
    stack = [anchor]
    while stack:
        u = stack.pop()
        for w, signed in adj[u]:
            if values[w] is None:
                # signed label is f(w) - f(u) seen from u
                values[w] = values[u] + signed
                stack.append(w)
    return Labeling(g, tuple(values), provenance="standard alpha_S labeling")


def caterpillar_d_divisible(g: OrderedBipartiteGraph, d: int) -> Labeling:
    """The standard alpha_S-labeling with S the d-divisible label set."""
    l = standard_alpha_s(g, divisible_label_set(g.size, d))
    return l.replace(l.values, d=d, provenance=f"caterpillar, standard labeling with d={d}")


# -- verification --------------------------------------------------------------

def _check_common(l: Labeling, target: Sequence[int], top: int, report: Report) -> None:
    f = l.values
    seen: dict[int, int] = {}
    for v, val in enumerate(f):
        if val in seen:
            report.fail(
                "not-injective",
                f"{l.host.names[seen[val]]} and {l.host.names[v]} both get {val}",
            )
        seen.setdefault(val, v)
    out_of_range = [val for val in f if val < 0 or val > top]
    if out_of_range:
        report.fail("out-of-range", f"labels {sorted(out_of_range)} outside 0..{top}")
    got = Counter(l.edge_differences)
    want = Counter(target)
    if got != want:
        extra = sorted((got - want).elements())
        missing = sorted((want - got).elements())
        report.fail("difference-set", f"unexpected {extra}, missing {missing}")


def _separation(l: Labeling) -> tuple[int, int, int, int]:
    a = l.side_values("A")
    b = l.side_values("B")
    return max(a), min(a), max(b), min(b)


def verify_alpha_s(l: Labeling, s: LabelSet | Sequence[int]) -> Report:
    """Check injectivity, range, the difference set and max_A f < min_B f."""
    if not isinstance(s, LabelSet):
        s = LabelSet.of(s)
    report = Report()
    if len(s) != l.host.size:
        report.fail("size-mismatch", f"|S|={len(s)} for {l.host.size} edges")
    _check_common(l, s.values, s.max_value, report)
    max_a, _, _, min_b = _separation(l)
    if not max_a < min_b:
        report.fail("alpha-separation", f"max_A f = {max_a} is not below min_B f = {min_b}")
    return report


def verify_d_divisible(l: Labeling, d: int, require_alpha: bool = False) -> Report:
    """d-divisible graceful check; with ``require_alpha`` also the separation.

    Separation is side-agnostic: either part may carry the small labels.
    """
    e = l.host.size
    target = divisible_label_set(e, d)
    report = Report()
    _check_common(l, target.values, target.max_value, report)
    if require_alpha:
        max_a, min_a, max_b, min_b = _separation(l)
        if not (max_a < min_b or max_b < min_a):
            report.fail(
                "alpha-separation",
                f"A spans [{min_a}, {max_a}] and B spans [{min_b}, {max_b}]",
            )
    return report


def is_d_divisible_alpha(l: Labeling, d: int) -> bool:
    return verify_d_divisible(l, d, require_alpha=True).holds


# -- derived quantities ---------------------------------------------------------

def mv_labels(l: Labeling, side: str) -> set[int]:
    """Missing vertex labels: gaps between min and max of f on one part."""
    if side not in ("A", "B"):
        raise LabelingError("invalid-spec", f"side must be 'A' or 'B', got {side!r}")
    vals = set(l.side_values(side))
    if not vals:
        raise LabelingError("invalid-spec", "empty side")
    return set(range(min(vals), max(vals) + 1)) - vals


def _endpoints(g: OrderedBipartiteGraph) -> tuple[int, int]:
    if not g.has_y_t or g.t < 1:
        raise LabelingError("wrong-kind", "graph has no y_t endpoint")
    return g.x(1), g.y(g.t)


def closing_difference(l: Labeling) -> int:
    """f(y_t) - f(x_1)."""
    x1, yt = _endpoints(l.host)
    return l.values[yt] - l.values[x1]


def extend_with_closing_edge(l: Labeling, c: int) -> Labeling:
    """Move a caterpillar labeling onto the graph closed by [x_1, y_t]."""
    g = l.host
    if g.kind != CATERPILLAR:
        raise LabelingError("wrong-kind", "only caterpillar labelings can be extended")
    _endpoints(g)
    got = closing_difference(l)
    if got != c:
        raise LabelingError("cannot-extend", f"closing difference is {got}, not {c}")
    if c in l.edge_differences:
        raise LabelingError("cannot-extend", f"difference {c} is already used")
    return l.replace(l.values, host=g.closed())


def complement_labeling(l: Labeling, top_label: int) -> Labeling:
    """g(x) = top - f(x); differences are unchanged and the parts swap roles."""
    if top_label < max(l.values):
        raise LabelingError("invalid-top", f"top label {top_label} below max label {max(l.values)}")
    return l.replace([top_label - v for v in l.values])


def mv_counts(l: Labeling) -> tuple[int, int]:
    return len(mv_labels(l, "A")), len(mv_labels(l, "B"))
