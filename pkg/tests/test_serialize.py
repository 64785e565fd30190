import json

import pytest

from divgraceful import serialize
from divgraceful.cycles import cycle_d_divisible
from divgraceful.decompose import decompose
from divgraceful.errors import LabelingError
from divgraceful.graphs import build_caterpillar, build_corona, build_cycle, build_hairy_cycle
from divgraceful.hairy import corona_d_divisible


@pytest.mark.parametrize(
    "g",
    [build_caterpillar([1, 0, 2]), build_hairy_cycle([1, 0, 2, 1]), build_corona(3, 2), build_cycle(8)],
)
def test_graph_round_trip(g):
    data = serialize.graph_to_dict(g)
    h = serialize.graph_from_dict(json.loads(serialize.dumps(data)))
    assert h.names == g.names and h.edges == g.edges and h.kind == g.kind


def test_graph_schema():
    assert serialize.graph_to_dict(build_corona(3, 2)) == {
        "kind": "hairy-cycle", "pendants": [2] * 6, "t": 3, "lambda": 2,
    }


def test_labeling_round_trip_is_byte_identical():
    l = corona_d_divisible(5, 2, 6)
    text = serialize.dumps(serialize.labeling_to_dict(l))
    back = serialize.labeling_from_dict(serialize.loads(text))
    assert back.values == l.values and back.d == 6
    assert serialize.dumps(serialize.labeling_to_dict(back)) == text
    assert text.endswith("\n")


def test_decomposition_round_trip():
    l = cycle_d_divisible(2, 2)
    dec = decompose(l, 2)
    text = serialize.dumps(serialize.decomposition_to_dict(dec))
    back = serialize.decomposition_from_dict(serialize.loads(text))
    assert back.v == dec.v and back.n == 2
    assert list(back.iter_blocks()) == list(dec.iter_blocks())
    assert serialize.dumps(serialize.decomposition_to_dict(back)) == text


@pytest.mark.parametrize(
    "bad",
    [
        {"kind": "caterpillar"},
        {"kind": "tree", "pendants": [1]},
        {"kind": "caterpillar", "pendants": [1, 1], "t": 5},
        [1, 2],
    ],
)
def test_bad_graph_json(bad):
    with pytest.raises(LabelingError) as exc:
        serialize.graph_from_dict(bad)
    assert exc.value.code == "invalid-spec"


def test_bad_labeling_json():
    g = serialize.graph_to_dict(build_caterpillar([1, 1]))
    for bad in ({"graph": g}, {"graph": g, "values": [0, "a"]}, []):
        with pytest.raises(LabelingError):
            serialize.labeling_from_dict(bad)
    with pytest.raises(LabelingError):
        serialize.loads("{not json")
    with pytest.raises(LabelingError):
        serialize.decomposition_from_dict({"v": 4})


def test_dot():
    l = cycle_d_divisible(2, 2)
    dot = serialize.to_dot(l.host, l)
    assert dot.startswith("graph")
    assert dot.count("rank=same") == 2
    assert "dashed" in dot
    for diff in l.edge_differences:
        assert f"label={diff}" in dot
    plain = serialize.to_dot(build_caterpillar([1, 1]))
    assert "dashed" not in plain
