"""Exhaustive backtracking for alpha_S / d-divisible labelings of small graphs.

This is the independent ground truth: it knows nothing about the standard
construction or the rewriting operations, only the labeling definitions.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from .errors import LabelingError
from .graphs import OrderedBipartiteGraph
from .labeling import LabelSet, Labeling, closing_difference
from .transforms import (
    TransformRequest,
    apply_transform,
    candidate_requests,
    check_preconditions,
    resolve,
    touched_edges,
)

MAX_VERTICES = 20


def _search_order(g: OrderedBipartiteGraph) -> list[int]:
    """Vertices by first appearance in the canonical edge list."""
    order: list[int] = []
    seen: set[int] = set()
    for a, b in g.edges:
        for v in (a, b):
            if v not in seen:
                seen.add(v)
                order.append(v)
    for v in range(g.num_vertices):
        if v not in seen:
            order.append(v)
    return order


def iter_labelings(
    g: OrderedBipartiteGraph,
    s: LabelSet | Sequence[int],
    require_alpha: bool = False,
    max_vertices: int = MAX_VERTICES,
    ordered_leaves: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Yield value tuples (indexed by vertex id) realising S, in a fixed order.

    With ``require_alpha`` part A must lie entirely below part B.
    ``ordered_leaves`` keeps only labelings whose sibling pendants increase
    in canonical order; that is one representative per pendant permutation,
    which is enough when a single witness is wanted.
    """
    if not isinstance(s, LabelSet):
        s = LabelSet.of(s)
    if len(s) != g.size:
        raise LabelingError("size-mismatch", f"|S|={len(s)} for {g.size} edges")
    if g.num_vertices > max_vertices:
        raise LabelingError(
            "search-budget-exceeded", f"{g.num_vertices} vertices exceeds the limit {max_vertices}"
        )
    top = s.max_value
    allowed = set(s.values)
    order = _search_order(g)
    adj = g.adjacency()
    position = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in adj[v] if position[w] < position[v]] for v in order]
    in_a = [g.in_a(v) for v in range(g.num_vertices)]
    prev_leaf: dict[int, int] = {}
    if ordered_leaves:
        for group in g.leaves:
            for u, w in zip(group, group[1:]):
                prev_leaf[w] = u

    values: list[int | None] = [None] * g.num_vertices
    used_labels: set[int] = set()
    used_diffs: set[int] = set()
    bounds = [-1, top + 1]  # running max_A, min_B
    descending = sorted(allowed, reverse=True)

    def realizable(diff: int) -> bool:
        """Can some still unlabeled edge carry ``diff``?  (sound, not exact)"""
        free_pair = any(
            x not in used_labels and x + diff not in used_labels for x in range(top - diff + 1)
        )
        for a, b in g.edges:
            fa, fb = values[a], values[b]
            if fa is not None and fb is not None:
                continue
            if fa is None and fb is None:
                if free_pair:
                    return True
                continue
            p = fa if fa is not None else fb
            for q in (p + diff, p - diff):
                if 0 <= q <= top and q not in used_labels:
                    return True
        return False

    def candidates(idx: int) -> list[int]:
        v = order[idx]
        back = earlier[idx]
        if not back:
            return list(range(top + 1))
        base = values[back[0]]
        out = set()
        for diff in allowed - used_diffs:
            if require_alpha:
                out.add(base - diff if in_a[v] else base + diff)
            else:
                out.add(base + diff)
                out.add(base - diff)
        return sorted(x for x in out if 0 <= x <= top)

    def extend(idx: int) -> Iterator[tuple[int, ...]]:
        if idx == len(order):
            yield tuple(values)  # type: ignore[arg-type]
            return
        v = order[idx]
        for val in candidates(idx):
            if val in used_labels:
                continue
            if v in prev_leaf and val < values[prev_leaf[v]]:
                continue
            if require_alpha:
                if in_a[v] and val >= bounds[1]:
                    continue
                if not in_a[v] and val <= bounds[0]:
                    continue
            diffs = []
            ok = True
            for w in earlier[idx]:
                diff = abs(val - values[w])
                if diff not in allowed or diff in used_diffs or diff in diffs:
                    ok = False
                    break
                diffs.append(diff)
            if not ok:
                continue
            saved = list(bounds)
            if in_a[v]:
                bounds[0] = max(bounds[0], val)
            else:
                bounds[1] = min(bounds[1], val)
            values[v] = val
            used_labels.add(val)
            used_diffs.update(diffs)
            if all(realizable(x) for x in descending if x not in used_diffs):
                yield from extend(idx + 1)
            used_diffs.difference_update(diffs)
            used_labels.discard(val)
            values[v] = None
            bounds[:] = saved

    yield from extend(0)


def search_labelings(
    g: OrderedBipartiteGraph,
    s: LabelSet | Sequence[int],
    require_alpha: bool = False,
    limit: int | None = None,
    max_vertices: int = MAX_VERTICES,
) -> list[Labeling]:
    out: list[Labeling] = []
    for vals in iter_labelings(g, s, require_alpha, max_vertices):
        out.append(Labeling(g, vals, provenance="exhaustive search"))
        if limit is not None and len(out) >= limit:
            break
    return out


def canonical_leaf_order(l: Labeling) -> tuple[int, ...]:
    """Sort the values on every group of sibling pendants.

    Permuting sibling pendants is an automorphism, so a labeling is valid
    exactly when this representative is.
    """
    vals = list(l.values)
    for group in l.host.leaves:
        for v, val in zip(group, sorted(vals[u] for u in group)):
            vals[v] = val
    return tuple(vals)


def oracle_contains(
    l: Labeling,
    s: LabelSet | Sequence[int],
    require_alpha: bool = True,
    max_vertices: int = MAX_VERTICES,
) -> bool:
    """True when the exhaustive enumeration for (host, S) produces ``l``.

    The enumeration runs with sibling pendants ordered and looks for the
    matching representative of ``l``.
    """
    target = canonical_leaf_order(l)
    return any(
        vals == target
        for vals in iter_labelings(l.host, s, require_alpha, max_vertices, ordered_leaves=True)
    )


def search_transform_sequence(
    l: Labeling, target_closing: int, budget: int = 3
) -> list[TransformRequest] | None:
    """Breadth-first search for edge-disjoint O_i's reaching a closing difference."""
    if closing_difference(l) == target_closing:
        return []
    requests = candidate_requests(l.host)
    start = (l, frozenset(), ())
    frontier = deque([start])
    seen = {(l.values, frozenset())}
    while frontier:
        cur, used, seq = frontier.popleft()
        if len(seq) >= budget:
            continue
        for r in requests:
            r = resolve(cur, r)
            if r.op == "O5_4" and r.j is None:
                continue
            try:
                edges = touched_edges(cur.host, r)
            except (IndexError, LabelingError):
                continue
            if used & edges or not check_preconditions(cur, r).holds:
                continue
            nxt = apply_transform(cur, r)
            key = (nxt.values, used | edges)
            if key in seen:
                continue
            seen.add(key)
            path = seq + (r,)
            if closing_difference(nxt) == target_closing:
                return list(path)
            frontier.append((nxt, used | edges, path))
    return None
