"""Reference checks written from the definitions alone.

Nothing here imports the construction code; graphs are rebuilt with networkx
from vertex names and labelings are judged by direct computation.
"""

from __future__ import annotations

from itertools import permutations

import networkx as nx


def nx_caterpillar(pendants, closed=False):
    """Graph on the names x1, y1, x1^1, ... built straight from the pendant counts."""
    g = nx.Graph()
    spine = []
    for p, count in enumerate(pendants):
        name = f"{'x' if p % 2 == 0 else 'y'}{p // 2 + 1}"
        spine.append(name)
        g.add_node(name)
        for j in range(1, count + 1):
            g.add_edge(name, f"{name}^{j}")
    nx.add_path(g, spine)
    if closed:
        g.add_edge(spine[0], spine[-1])
    return g


def divisible_set(e, d):
    m = e // d
    return sorted(set(range(1, d * (m + 1))) - {i * (m + 1) for i in range(1, d)})


def check_labeling(g, f, labels, alpha=True):
    """(ok, reason) for a vertex map f on the networkx graph g."""
    vals = [f[v] for v in g.nodes]
    if len(set(vals)) != len(vals):
        return False, "not injective"
    if min(vals) < 0 or max(vals) > max(labels):
        return False, "out of range"
    diffs = sorted(abs(f[u] - f[w]) for u, w in g.edges)
    if diffs != sorted(labels):
        return False, f"differences {diffs}"
    if alpha:
        left, right = nx.bipartite.sets(g)
        lo, hi = (left, right) if max(f[v] for v in left) < min(f[v] for v in right) else (right, left)
        if not max(f[v] for v in lo) < min(f[v] for v in hi):
            return False, "no alpha separation"
    return True, ""


def is_d_divisible_alpha(g, f, d):
    return check_labeling(g, f, divisible_set(g.number_of_edges(), d))[0]


def brute_force(g, labels, alpha=True):
    """Every labeling realising ``labels``; only for a handful of vertices."""
    nodes = sorted(g.nodes)
    top = max(labels)
    out = []
    for vals in permutations(range(top + 1), len(nodes)):
        f = dict(zip(nodes, vals))
        if check_labeling(g, f, labels, alpha)[0]:
            out.append(f)
    return out


def multipartite_edge_set(q, v):
    """Edges of the complete multipartite graph on Z_v with parts mod q."""
    return {(u, w) for u in range(v) for w in range(u + 1, v) if (w - u) % q}


def odd_numbers(e):
    return list(range(1, 2 * e, 2))
