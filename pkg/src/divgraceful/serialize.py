"""JSON and DOT forms of graphs, labelings and decompositions.

``dumps`` is the canonical serialization (sorted keys, two-space indent,
trailing newline), so load -> dump reproduces a file byte for byte.
"""

from __future__ import annotations

import json
from typing import Any

from .decompose import BaseBlock, Decomposition
from .errors import LabelingError
from .graphs import OrderedBipartiteGraph, graph_from_spec
from .labeling import Labeling


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise LabelingError("invalid-spec", f"not valid JSON: {exc}") from None


# -- graphs ---------------------------------------------------------------------

def graph_to_dict(g: OrderedBipartiteGraph) -> dict:
    out = {"kind": g.kind, "pendants": list(g.pendants), "t": g.t}
    if g.lam is not None:
        out["lambda"] = g.lam
    return out


def graph_from_dict(data: dict) -> OrderedBipartiteGraph:
    try:
        kind, pendants = data["kind"], data["pendants"]
    except (KeyError, TypeError):
        raise LabelingError("invalid-spec", "graph JSON needs 'kind' and 'pendants'") from None
    g = graph_from_spec(kind, pendants, data.get("lambda"))
    if "t" in data and data["t"] != g.t:
        raise LabelingError("invalid-spec", f"t={data['t']} disagrees with the pendants (t={g.t})")
    return g


# -- labelings --------------------------------------------------------------------

def labeling_to_dict(l: Labeling) -> dict:
    out: dict[str, Any] = {"graph": graph_to_dict(l.host), "values": list(l.values)}
    if l.d is not None:
        out["d"] = l.d
    if l.provenance is not None:
        out["provenance"] = l.provenance
    if l.meta:
        out["meta"] = json.loads(json.dumps(dict(l.meta)))
    return out


def labeling_from_dict(data: dict) -> Labeling:
    if not isinstance(data, dict) or "graph" not in data or "values" not in data:
        raise LabelingError("invalid-spec", "labeling JSON needs 'graph' and 'values'")
    g = graph_from_dict(data["graph"])
    values = data["values"]
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise LabelingError("invalid-spec", "'values' must be a list of integers")
    return Labeling(g, tuple(values), d=data.get("d"), provenance=data.get("provenance"), meta=data.get("meta", {}))


# -- decompositions ---------------------------------------------------------------

def decomposition_to_dict(dec: Decomposition) -> dict:
    out: dict[str, Any] = {
        "v": dec.v,
        "partCount": dec.part_count,
        "n": dec.n,
        "baseBlocks": [[list(e) for e in b.edges] for b in dec.base_blocks],
    }
    if dec.developed is not None:
        out["developed"] = [[list(e) for e in blk] for blk in dec.developed]
    if dec.provenance is not None:
        out["provenance"] = dec.provenance
    if dec.certificate is not None:
        out["certificate"] = dec.certificate
    return out


def decomposition_from_dict(data: dict) -> Decomposition:
    try:
        blocks = [
            BaseBlock(tuple((int(a), int(b)) for a, b in blk), j)
            for j, blk in enumerate(data["baseBlocks"])
        ]
        dec = Decomposition(int(data["v"]), int(data["partCount"]), int(data["n"]), blocks)
    except (KeyError, TypeError, ValueError):
        raise LabelingError("invalid-spec", "decomposition JSON needs v, partCount, n and baseBlocks") from None
    if "developed" in data:
        dec.developed = [tuple((int(a), int(b)) for a, b in blk) for blk in data["developed"]]
    dec.provenance = data.get("provenance")
    dec.certificate = data.get("certificate")
    return dec


# -- DOT ------------------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def to_dot(g: OrderedBipartiteGraph, l: Labeling | None = None) -> str:
    """Undirected DOT with parts A and B on separate ranks.

    With a labeling, vertices show their values and edges their differences.
    """
    lines = ["graph G {", "  node [shape=circle];"]
    for side, verts in (("A", g.vertices_a), ("B", g.vertices_b)):
        lines.append(f"  subgraph part_{side} {{")
        lines.append("    rank=same;")
        for v in verts:
            text = g.names[v] if l is None else f"{g.names[v]}\\n{l[v]}"
            lines.append(f"    v{v} [label={_quote(text)}];")
        lines.append("  }")
    for i, (a, b) in enumerate(g.edges):
        attrs = []
        if l is not None:
            attrs.append(f"label={abs(l[a] - l[b])}")
        if i == g.closing_edge_index:
            attrs.append("style=dashed")
        tail = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  v{a} -- v{b}{tail};")
    lines.append("}")
    return "\n".join(lines) + "\n"
