"""End-to-end acceptance checks, one test per criterion.

Each test is tagged with ``criterion``; the conftest prints one PASS/FAIL
line per criterion at the end of the run.
"""

import json
import os
import random
import time

import pytest

from divgraceful.cli import main
from divgraceful.cycles import cycle_closing_value, cycle_d_divisible, cycle_params
from divgraceful.decompose import decompose, verify_decomposition
from divgraceful.graphs import build_caterpillar, build_corona, build_hairy_cycle, canonical_hairy_form
from divgraceful.hairy import (
    corona_case,
    corona_d_divisible,
    odd_alpha_by_transforms,
    odd_alpha_closed_form,
    odd_alpha_hairy,
)
from divgraceful.labeling import (
    caterpillar_d_divisible,
    divisible_label_set,
    standard_alpha_s,
    verify_d_divisible,
)
from divgraceful.oracle import oracle_contains

from oracles import is_d_divisible_alpha, multipartite_edge_set, nx_caterpillar, odd_numbers
from test_transforms import check_commutation, check_laws


def divisors(e):
    return [d for d in range(1, e + 1) if e % d == 0]


def compositions(total, parts):
    """Every sequence of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for x in range(total + 1):
        for rest in compositions(total - x, parts - 1):
            yield (x,) + rest


def named(l):
    return {l.host.names[v]: val for v, val in enumerate(l.values)}


def note(request, text):
    request.node.user_properties.append(("detail", text))


@pytest.mark.criterion(1, "corona H(10,2), d=6")
def test_corona_h10_2_d6(request, capsys):
    t0 = time.perf_counter()
    code = main(["construct", "corona", "--t", "5", "--lambda", "2", "--d", "6"])
    elapsed = time.perf_counter() - t0
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["meta"]["c"] == 17
    assert data["meta"]["trace"] == [19, 18, 17]
    assert data["meta"]["transforms"] == ["O1@s=3", "O5@s=4"]
    l = corona_d_divisible(5, 2, 6)
    assert verify_d_divisible(l, 6, True).holds
    assert elapsed < 1
    note(request, f"c=17 via 19->18->17, {elapsed:.3f}s")


@pytest.mark.criterion(2, "cycle C_24, d=3 and d=8")
def test_cycle_c24(request):
    t0 = time.perf_counter()
    l3 = cycle_d_divisible(6, 3)
    assert l3.meta["c"] == 13 and cycle_params(l3).m + 1 == 9
    assert cycle_closing_value(6, 8) == (15, 17)
    for c in (15, 17):
        l8 = cycle_d_divisible(6, 8, c)
        assert cycle_params(l8).m + 1 == 4
        assert verify_d_divisible(l8, 8, True).holds
    assert verify_d_divisible(l3, 3, True).holds
    elapsed = time.perf_counter() - t0
    assert elapsed < 1
    note(request, f"{elapsed:.3f}s")


@pytest.mark.criterion(3, "caterpillar sweep e<=12")
def test_caterpillar_sweep(request):
    t0 = time.perf_counter()
    count = 0
    for length in range(1, 9):
        for total in range(9):
            for seq in compositions(total, length):
                g = build_caterpillar(seq)
                if not 0 < g.size <= 12:
                    continue
                for d in divisors(g.size):
                    l = caterpillar_d_divisible(g, d)
                    assert verify_d_divisible(l, d, True).holds, (seq, d)
                    count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    note(request, f"{count} (spec, d) pairs, {elapsed:.1f}s")


@pytest.mark.criterion(4, "hairy cycle dual path e<=14")
def test_hairy_dual_path(request):
    count = 0
    for t in range(2, 8):
        for total in range(1, 14 - 2 * t + 1):
            for seq in compositions(total, 2 * t):
                g = build_hairy_cycle(seq)
                a = odd_alpha_closed_form(g)
                b = odd_alpha_by_transforms(g)
                for l in (a, b):
                    assert verify_d_divisible(l, g.size, True).holds, seq
                assert sorted(a.edge_differences) == sorted(b.edge_differences) == odd_numbers(g.size)
                count += 1
    note(request, f"{count} pendant sequences")


@pytest.mark.criterion(5, "corona sweep t<=7, lambda<=4")
def test_corona_sweep(request):
    t0 = time.perf_counter()
    count = 0
    for t in range(2, 8):
        for lam in range(1, 5):
            e = 2 * t * (lam + 1)
            for d in divisors(e):
                # the dispatcher raises on the unreachable branch
                corona_case(t, lam, d)
                l = corona_d_divisible(t, lam, d)
                assert verify_d_divisible(l, d, True).holds, (t, lam, d)
                assert is_d_divisible_alpha(nx_caterpillar([lam] * (2 * t), closed=True), named(l), d)
                count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 120
    note(request, f"{count} (t, lambda, d) triples, {elapsed:.1f}s")


@pytest.mark.criterion(6, "cycle sweep k<=10")
def test_cycle_sweep(request):
    count = 0
    for k in range(1, 11):
        for d in divisors(4 * k):
            for c in cycle_closing_value(k, d):
                l = cycle_d_divisible(k, d, c)
                p = cycle_params(l)
                assert verify_d_divisible(l, d, True).holds
                assert c == 2 * k + p.d_y
                if p.m % 2:
                    assert c % 2 == 1
                else:
                    assert p.d_y * (p.m + 1) < c < (p.d_y + 1) * (p.m + 1)
                count += 1
    note(request, f"{count} (k, d, c) triples")


@pytest.mark.criterion(7, "cyclic decompositions")
def test_decompositions(request):
    t0 = time.perf_counter()
    cases = [(caterpillar_d_divisible(build_caterpillar([0, 0]), 1), 1)]
    cases += [(caterpillar_d_divisible(build_caterpillar([1, 1]), d), d) for d in (1, 3)]
    cases += [(cycle_d_divisible(2, 2), 2)]
    cases += [(corona_d_divisible(2, 1, d), d) for d in (1, 2, 4, 8)]
    count = 0
    for l, d in cases:
        for n in (1, 2):
            dec = decompose(l, n, d)
            assert dec.v <= 2000
            rep = verify_decomposition(dec, l.host)
            assert rep.holds, rep.failures
            assert dec.block_count == dec.v * n
            edges = sorted(tuple(sorted(e)) for blk in dec.iter_blocks() for e in blk)
            assert edges == sorted(multipartite_edge_set(dec.part_count, dec.v))
            count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    note(request, f"{count} decompositions, {elapsed:.1f}s")


FULL_ORACLE = os.environ.get("DIVGRACEFUL_FULL_ORACLE") == "1"


def _oracle_instances():
    """Constructed labelings for the oracle comparison.

    The default set is everything up to 9 (caterpillars) or 10 (hairy
    cycles) vertices, the cycles C_4, C_8, C_12, the coronas H(4,1) and
    H(4,2), and a seeded sample of larger caterpillars.  Setting
    DIVGRACEFUL_FULL_ORACLE=1 switches to every instance up to 14 vertices.
    """
    cat_max, hairy_max = (14, 14) if FULL_ORACLE else (9, 10)
    for length in range(1, 9):
        for total in range(cat_max - length + 1):
            for seq in compositions(total, length):
                g = build_caterpillar(seq)
                if g.size:
                    for d in divisors(g.size):
                        yield "caterpillar", caterpillar_d_divisible(g, d), d
    if not FULL_ORACLE:
        rng = random.Random(2024)
        big = [
            seq
            for length in range(2, 9)
            for total in range(10 - length, 15 - length)
            for seq in compositions(total, length)
        ]
        for seq in rng.sample(big, 8):
            g = build_caterpillar(seq)
            d = rng.choice(divisors(g.size))
            yield "caterpillar", caterpillar_d_divisible(g, d), d
    forms = set()
    for t in range(2, hairy_max // 2 + 1):
        for total in range(1, hairy_max - 2 * t + 1):
            forms.update(canonical_hairy_form(seq) for seq in compositions(total, 2 * t))
    for seq in sorted(forms):
        g = build_hairy_cycle(seq)
        yield "hairy", odd_alpha_hairy(g), g.size
    for k in range(1, 4):
        for d in divisors(4 * k):
            for c in cycle_closing_value(k, d):
                yield "cycle", cycle_d_divisible(k, d, c), d
    coronas = [(t, lam) for t in range(2, 4) for lam in range(1, 4) if 2 * t * (lam + 1) <= 14]
    if not FULL_ORACLE:
        coronas = [(2, 1), (2, 2)]
    for t, lam in coronas:
        for d in divisors(2 * t * (lam + 1)):
            yield "corona", corona_d_divisible(t, lam, d), d


@pytest.mark.criterion(8, "oracle agreement")
def test_oracle_agreement(request):
    counts = {}
    for family, l, d in _oracle_instances():
        assert l.host.num_vertices <= 14
        assert oracle_contains(l, divisible_label_set(l.host.size, d)), (family, l.host.pendants, d)
        counts[family] = counts.get(family, 0) + 1
    scope = "all |V|<=14" if FULL_ORACLE else "reduced set, DIVGRACEFUL_FULL_ORACLE=1 for all |V|<=14"
    note(request, ", ".join(f"{k} {v}" for k, v in counts.items()) + f"; {scope}")


@pytest.mark.criterion(9, "transform laws")
def test_transform_laws(request):
    rng = random.Random(5)
    applied = pairs = 0
    trials = 600
    for _ in range(trials):
        t = rng.randint(2, 6)
        seq = [rng.randint(0, 3) for _ in range(2 * t)]
        g = build_caterpillar(seq)
        if rng.random() < 0.5:
            e = g.size + 1
            full = divisible_label_set(e, rng.choice(divisors(e)))
            s = full.without(rng.choice(full.values)).values
        else:
            s = sorted(rng.sample(range(1, 2 * g.size + 2), g.size))
        l = standard_alpha_s(g, s)
        applied += check_laws(l, s)
        pairs += check_commutation(l)
    assert applied > 0 and pairs > 0
    note(request, f"{trials} caterpillars, {applied} applications, {pairs} commuting pairs")
