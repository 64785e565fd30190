import pytest

from divgraceful.cycles import cycle_closing_value, cycle_d_divisible, cycle_params
from divgraceful.errors import LabelingError
from divgraceful.labeling import complement_labeling, verify_d_divisible

import networkx as nx
from oracles import check_labeling, divisible_set, is_d_divisible_alpha


def divisors(e):
    return [d for d in range(1, e + 1) if e % d == 0]


def named(l):
    return {l.host.names[v]: val for v, val in enumerate(l.values)}


def nx_cycle(l):
    g = nx.Graph()
    g.add_edges_from((l.host.names[a], l.host.names[b]) for a, b in l.host.edges)
    return g


def test_c8_two_divisible():
    l = cycle_d_divisible(2, 2)
    assert sorted(l.side_values("A"), reverse=True) == [5, 4, 1, 0]
    assert sorted(l.side_values("B")) == [6, 7, 8, 9]
    assert l.meta["c"] == 4
    assert sorted(l.edge_differences) == [1, 2, 3, 4, 6, 7, 8, 9]


def test_closing_values():
    assert cycle_closing_value(6, 3) == (13,)
    assert cycle_closing_value(6, 8) == (15, 17)
    assert cycle_closing_value(2, 2) == (4,)
    assert cycle_d_divisible(6, 3).meta["c"] == 13


def test_both_choices_for_odd_m():
    for c in (15, 17):
        l = cycle_d_divisible(6, 8, c)
        assert l.meta["c"] == c
        assert verify_d_divisible(l, 8, True).holds


def test_bad_inputs():
    with pytest.raises(LabelingError) as exc:
        cycle_d_divisible(3, 5)
    assert exc.value.code == "not-admissible"
    with pytest.raises(LabelingError) as exc:
        cycle_d_divisible(6, 3, c=12)
    assert exc.value.code == "invalid-spec"
    with pytest.raises(LabelingError) as exc:
        cycle_d_divisible(0, 1)
    assert exc.value.code == "invalid-spec"


def test_graceful_complement():
    # d = 1 is an ordinary alpha-labeling; reflecting in e keeps it graceful
    l = cycle_d_divisible(3, 1)
    c = complement_labeling(l, 12)
    assert sorted(c.edge_differences) == list(range(1, 13))


@pytest.mark.parametrize("k", range(1, 11))
def test_every_cycle_up_to_40(k):
    for d in divisors(4 * k):
        for c in cycle_closing_value(k, d):
            l = cycle_d_divisible(k, d, c)
            p = cycle_params(l)
            assert p.e == 4 * k and p.m == 4 * k // d
            assert p.c == 2 * k + p.d_y
            if p.m % 2:
                assert c % 2 == 1
            else:
                assert p.d_y * (p.m + 1) < c < (p.d_y + 1) * (p.m + 1)
            assert verify_d_divisible(l, d, True).holds
            assert is_d_divisible_alpha(nx_cycle(l), named(l), d)
