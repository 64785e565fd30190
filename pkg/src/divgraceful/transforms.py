"""Rewriting operations O1..O5 and O5_4 on alpha_S-labelings of caterpillars.

Each operation commutes the labels of two (O5_4: three) edges around a
spine vertex by shifting a block of vertex values, which moves the closing
difference f(y_t) - f(x_1) down by a known amount while keeping the edge
label set S and the alpha separation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import LabelingError
from .graphs import CATERPILLAR, OrderedBipartiteGraph
from .labeling import Labeling, Report

OPS = ("O1", "O2", "O3", "O4", "O5", "O5_4")


@dataclass(frozen=True)
class TransformRequest:
    op: str
    s: int | None = None
    j: int | None = None

    def __str__(self) -> str:
        if self.op == "O4":
            return "O4"
        tail = f",j={self.j}" if self.j is not None else ""
        return f"{self.op}@s={self.s}{tail}"

    @classmethod
    def parse(cls, text: str) -> "TransformRequest":
        """Inverse of ``str``: ``"O1@s=3"``, ``"O5_4@s=2,j=1"``, ``"O4"``."""
        op, _, rest = text.partition("@")
        s = j = None
        for part in filter(None, rest.split(",")):
            key, _, val = part.partition("=")
            if key == "s":
                s = int(val)
            elif key == "j":
                j = int(val)
        return cls(op, s, j)


@dataclass
class ConditionReport(Report):
    conditions: dict | None = None

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["conditions"] = dict(self.conditions or {})
        return out


def _validate(g: OrderedBipartiteGraph, r: TransformRequest) -> None:
    if g.kind != CATERPILLAR:
        raise LabelingError("wrong-kind", "transforms act on caterpillar labelings")
    if r.op not in OPS:
        raise LabelingError("invalid-request", f"unknown operation {r.op!r}")
    if r.op == "O4":
        return
    if r.s is None or not 1 <= r.s <= g.t - 1:
        raise LabelingError("invalid-request", f"{r.op} needs 1 <= s <= t-1 = {g.t - 1}, got {r.s}")
    if r.op in ("O1", "O2", "O3", "O5", "O5_4") and 2 * r.s >= len(g.pendants):
        raise LabelingError("invalid-request", f"x_{r.s + 1} does not exist")
    if r.op == "O5_4" and r.j is not None and not 1 <= r.j <= g.m(r.s):
        raise LabelingError("invalid-request", f"j={r.j} outside 1..m_s={g.m(r.s)}")


def _find_j(l: Labeling, s: int) -> int | None:
    g, f = l.host, l.values
    for j in range(1, g.m(s) + 1):
        if f[g.yp(s, j)] == f[g.x(s)] - 4:
            return j
    return None


def resolve(l: Labeling, r: TransformRequest) -> TransformRequest:
    """Fill in the pendant index j of O5_4 by scanning when it is absent."""
    if r.op == "O5_4" and r.j is None:
        j = _find_j(l, r.s)
        if j is not None:
            return TransformRequest(r.op, r.s, j)
    return r


def _b_predecessor(g: OrderedBipartiteGraph, v: int) -> int | None:
    """The vertex before v in the B order: x_s^{n_s} when n_s > 0, else y_{s-1}."""
    return v - 1 if v - 1 >= g.n_a else None


def _b_successors(g: OrderedBipartiteGraph, v: int, count: int) -> list[int]:
    """Up to ``count`` vertices after v in the B order (x_{s+1}^1, ... for v = y_s)."""
    return list(range(v + 1, min(v + 1 + count, g.num_vertices)))


def check_preconditions(l: Labeling, r: TransformRequest) -> ConditionReport:
    g, f = l.host, l.values
    _validate(g, r)
    r = resolve(l, r)
    cond: dict[str, bool] = {}
    report = ConditionReport(conditions=cond)
    s = r.s

    def need(key: str, ok: bool, detail: str) -> None:
        cond[key] = bool(ok)
        if not ok:
            report.fail(f"condition-{key}", detail)

    if r.op == "O4":
        need("1", g.n(g.t) != 0, "n_t = 0")
        need("2", g.has_y_t and g.m(g.t) == 0, "m_t != 0 (or no y_t)")
        return report

    ys = f[g.y(s)]
    if r.op in ("O1", "O2", "O3"):
        shift = 1 if r.op == "O1" else 2
        min_h = 2 if r.op == "O1" else 3
        if r.op == "O3":
            ok = g.n(s + 1) >= 2 and ys + 2 == f[g.xp(s + 1, 1)] + 1 == f[g.xp(s + 1, 2)]
            need("1", ok, "f(y_s)+2 = f(x_{s+1}^1)+1 = f(x_{s+1}^2) fails")
        else:
            ok = g.n(s + 1) >= 1 and ys + shift == f[g.xp(s + 1, 1)]
            need("1", ok, f"f(y_s)+{shift} = f(x_{{s+1}}^1) fails")
        prev = _b_predecessor(g, g.y(s))
        ok = prev is not None and ys - f[prev] >= min_h
        need("2", ok, f"f(y_s) - f(previous B vertex) >= {min_h} fails")
    elif r.op == "O5":
        nxt = _b_successors(g, g.y(s), 1)
        ok = len(nxt) == 1 and ys == f[nxt[0]] - 2
        need("1", ok, "f(y_s) = f(next B vertex) - 2 fails")
        ok = g.n(s) >= 1 and ys == f[g.xp(s, g.n(s))] + 1
        need("2", ok, "f(y_s) = f(x_s^{n_s}) + 1 fails")
    elif r.op == "O5_4":
        ok = r.j is not None and 1 <= r.j <= g.m(s) and f[g.yp(s, r.j)] == f[g.x(s)] - 4
        need("1", ok, "no pendant y_s^j with f(y_s^j) = f(x_s) - 4")
        ok = g.n(s) >= 1 and ys == f[g.xp(s, g.n(s))] + 1
        need("2", ok, "f(y_s) = f(x_s^{n_s}) + 1 fails")
        nxt = _b_successors(g, g.y(s), 5)
        ok = [f[v] - ys for v in nxt] == [1, 2, 3, 4, 6]
        need("3", ok, "the five B vertices after y_s are not at f(y_s) + 1, 2, 3, 4, 6")
    if report.holds:
        _check_image(l, r, need)
    return report


def _check_image(l: Labeling, r: TransformRequest, need) -> None:
    """The numbered conditions assume B values increase along the B order,
    as in the standard labeling. After earlier rewrites that can fail, so
    the image itself is checked for injectivity and for the separation.
    """
    g = l.host
    img = _image(l, r)
    need("injective", len(set(img)) == len(img), "the rewritten values collide")
    a = [img[v] for v in g.vertices_a]
    b = [img[v] for v in g.vertices_b]
    was = max(l.side_values("A")) < min(l.side_values("B"))
    need("separation", not was or max(a) < min(b), "the rewrite breaks max_A f < min_B f")


def touched_edges(g: OrderedBipartiteGraph, r: TransformRequest) -> frozenset[int]:
    """Indices of the edges whose labels the operation permutes."""
    s = r.s
    if r.op == "O4":
        pairs = [(g.x(g.t), g.xp(g.t, g.n(g.t))), (g.x(g.t), g.y(g.t))]
    elif r.op in ("O1", "O2"):
        pairs = [(g.y(s), g.x(s + 1)), (g.x(s + 1), g.xp(s + 1, 1))]
    elif r.op == "O3":
        pairs = [(g.y(s), g.x(s + 1)), (g.x(s + 1), g.xp(s + 1, 2))]
    else:
        pairs = [(g.x(s), g.xp(s, g.n(s))), (g.x(s), g.y(s))]
        if r.op == "O5_4":
            pairs.append((g.y(s), g.yp(s, r.j)))
    return frozenset(g.edge_index(u, w) for u, w in pairs)


def _image(l: Labeling, r: TransformRequest) -> list[int]:
    g = l.host
    f = list(l.values)
    s = r.s
    if r.op == "O4":
        a, b = g.y(g.t), g.xp(g.t, g.n(g.t))
        f[a], f[b] = f[b], f[a]
        return f
    old = l.values
    if r.op in ("O1", "O2", "O3"):
        shift = 1 if r.op == "O1" else 2
        for v in g.prefix_vertices(2 * s - 1):
            f[v] = old[v] + shift
        moved = g.xp(s + 1, 2 if r.op == "O3" else 1)
        f[moved] = old[moved] - shift
        return f
    for v in g.prefix_vertices(2 * s - 2):
        f[v] = old[v] + 1
    tail = g.xp(s, g.n(s))
    if r.op == "O5":
        f[tail] = old[tail] + 2
    else:
        f[tail] = old[g.y(s)] + 5
        f[g.yp(s, r.j)] = old[g.x(s)]
    return f


def apply_transform(l: Labeling, r: TransformRequest) -> Labeling:
    """Return the rewritten labeling; the input is never modified."""
    report = check_preconditions(l, r)
    if not report.holds:
        raise LabelingError("preconditions-not-met", f"{r}: {report.failures}")
    r = resolve(l, r)
    meta = dict(l.meta)
    meta["transforms"] = list(meta.get("transforms", [])) + [str(r)]
    return l.replace(_image(l, r), meta=meta)


def closing_delta(l: Labeling, r: TransformRequest) -> int:
    """The change in f(y_t) - f(x_1) the operation is documented to cause."""
    if r.op in ("O2", "O3"):
        return -2
    if r.op == "O4":
        g = l.host
        return -(l.values[g.y(g.t)] - l.values[g.xp(g.t, g.n(g.t))])
    return -1


def iter_compose(l: Labeling, rs: Iterable[TransformRequest]) -> Iterator[Labeling]:
    """Yield the labeling after each request; edge sets must stay disjoint."""
    used: set[int] = set()
    for r in rs:
        _validate(l.host, r)
        r = resolve(l, r)
        if r.op == "O5_4" and r.j is None:
            raise LabelingError("preconditions-not-met", f"{r}: no admissible j")
        edges = touched_edges(l.host, r)
        if used & edges:
            raise LabelingError("not-disjoint", f"{r} touches edges {sorted(used & edges)} again")
        used |= edges
        l = apply_transform(l, r)
        yield l


def compose_transforms(l: Labeling, rs: Iterable[TransformRequest]) -> Labeling:
    """Apply requests in order, insisting that their edge sets are disjoint."""
    for l in iter_compose(l, rs):
        pass
    return l


def candidate_requests(g: OrderedBipartiteGraph) -> list[TransformRequest]:
    """Every structurally meaningful request on the caterpillar ``g``."""
    out = [TransformRequest("O4")] if g.has_y_t and g.n(g.t) and g.m(g.t) == 0 else []
    for s in range(1, g.t):
        if 2 * s >= len(g.pendants):
            continue
        for op in ("O1", "O2", "O3", "O5"):
            out.append(TransformRequest(op, s))
        for j in range(1, g.m(s) + 1):
            out.append(TransformRequest("O5_4", s, j))
    return out
