"""Acceptance suite: one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import time

from folkman.arrowing import ARROWS, FREE, arrows, find_free_coloring, verify_composition_instance
from folkman.bounds import (best_bounds, check_recurrences, closed_form_upper_3p,
                            closed_form_upper_22p, default_table, composition_bound)
from folkman.formats import (parse_edge_list, parse_graph6,
                             serialize_edge_list, serialize_graph6)
from folkman.graphs import complement, complete, cycle, from_edges, join
from folkman.arrowing import in_class_H
from folkman.signatures import normalize
from folkman.witnesses import VERIFIED, base_witness

from conftest import (all_graphs, coloring_is_free, naive_arrows,
                      naive_find_free, properly_colorable, random_graph,
                      signatures_up_to)

TABLE = default_table()


def test_acceptance_1_km_baseline():
    started = time.perf_counter()
    checked = 0
    for parts in signatures_up_to(3, 7):
        sig = normalize(list(parts))
        m = sig.m
        assert arrows(complete(m), sig), f"K_{m} must arrow {sig}"
        assert not arrows(complete(m - 1), sig), f"K_{m-1} must not arrow {sig}"
        checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    print(f"ACCEPTANCE 1 K_m baseline: PASS ({checked} signatures, {elapsed:.2f}s)")


def test_acceptance_2_small_exact_values():
    started = time.perf_counter()
    # F(2,2;3) = 5: no graph on <= 4 vertices is in H(2,2;3); C5 is.
    for n in range(1, 5):
        for g in all_graphs(n):
            assert not in_class_H(g, [2, 2], 3)
    assert in_class_H(cycle(5), [2, 2], 3)
    sig22 = normalize([2, 2])
    assert sig22.m + sig22.p == 5
    t_first = time.perf_counter() - started
    assert t_first < 30.0

    # F(2,2,2;4) = 6: no graph on <= 5 vertices is in H(2,2,2;4); K1 + C5 is.
    started2 = time.perf_counter()
    for n in range(1, 6):
        for g in all_graphs(n):
            assert not in_class_H(g, [2, 2, 2], 4)
    assert in_class_H(join(complete(1), cycle(5)), [2, 2, 2], 4)
    t_second = time.perf_counter() - started2
    assert t_second < 30.0
    print(f"ACCEPTANCE 2 small exact values: PASS (F(2,2;3)=5 in {t_first:.2f}s, "
          f"F(2,2,2;4)=6 in {t_second:.2f}s)")


def test_acceptance_3_composition_law():
    started = time.perf_counter()
    assert verify_composition_instance(cycle(5), [2, 2], cycle(5), [2, 2], 1)

    rng = random.Random(12321)
    pool = [normalize(list(parts)) for parts in signatures_up_to(3, 6)]
    pairs = []
    for s1 in pool:
        for s2 in pool:
            if s1.r != s2.r:
                continue
            diff = [j for j in range(s1.r) if s1.parts[j] != s2.parts[j]]
            if len(diff) > 1:
                continue
            position = diff[0] if diff else rng.randrange(s1.r)
            pairs.append((s1, s2, position))
    rng.shuffle(pairs)

    def witness_for(sig):
        for _ in range(20):
            g = random_graph(rng, rng.randint(max(2, sig.m - 1), 6), 0.85)
            if g.n >= sig.m and arrows(g, sig):
                return g
        return complete(min(6, sig.m))

    verified = 0
    for s1, s2, position in pairs:
        if verified == 20:
            break
        g1, g2 = witness_for(s1), witness_for(s2)
        if not (arrows(g1, s1) and arrows(g2, s2)):
            continue
        assert verify_composition_instance(g1, s1, g2, s2, position), \
            f"composition refuted for {s1} / {s2} at {position}: engine bug"
        verified += 1
    assert verified == 20
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    print(f"ACCEPTANCE 3 composition law: PASS (pentagon pair + {verified} random pairs, "
          f"zero refutations, {elapsed:.2f}s)")


def test_acceptance_4_closed_form_tables():
    started = time.perf_counter()
    spots = {
        ((3, 8), 9): 26,
        ((3, 9), 10): 35,
        ((3, 11), 12): 43,
        ((2, 2, 10), 11): 35,
        ((2, 2, 7), 8): 28,
    }
    for (parts, q), want in spots.items():
        assert composition_bound(list(parts), q, TABLE).upper == want
    for p in range(4, 41):
        th1 = composition_bound([3, p], p + 1, TABLE).upper
        th2 = composition_bound([2, 2, p], p + 1, TABLE).upper
        assert th1 == closed_form_upper_3p(p)
        assert th2 == closed_form_upper_22p(p)
        assert th1 <= 4 * p + 2 and th2 <= 4 * p + 2
        assert closed_form_upper_22p(p) <= closed_form_upper_3p(p)
    report = check_recurrences(40, TABLE)
    assert report.ok, report.violations
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"ACCEPTANCE 4 closed-form tables: PASS (p=4..40, recurrences ok, {elapsed:.2f}s)")


def test_acceptance_5_q_equals_m_witness_family():
    started = time.perf_counter()
    family = [normalize(list(parts)) for parts in signatures_up_to(3, 10)]
    family = [s for s in family if s.r in (2, 3) and s.m + s.p <= 12]
    assert normalize([3, 3]) in family and normalize([2, 2, 2]) in family
    for sig in family:
        cert = base_witness(sig, sig.m)
        assert cert.status == VERIFIED, f"family candidate for {sig} not verified"
        assert cert.vertices == sig.m + sig.p
    cert33 = base_witness([3, 3], 5)
    assert cert33.vertices == 8
    cert222 = base_witness([2, 2, 2], 4)
    assert cert222.vertices == 6
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    print(f"ACCEPTANCE 5 q=m witness family: PASS ({len(family)} signatures verified, "
          f"{elapsed:.2f}s)")


def test_acceptance_6_oracle_equivalence_suite():
    started = time.perf_counter()
    rng = random.Random(8808)
    sig_pool = signatures_up_to(3, 6)

    for _ in range(500):
        g = random_graph(rng, rng.randint(0, 6), rng.random())
        parts = rng.choice(sig_pool)
        result = find_free_coloring(g, parts)
        assert result.verdict == (ARROWS if naive_arrows(g, parts) else FREE)
        if result.verdict == FREE:
            assert coloring_is_free(g, parts, result.coloring)

    checked = 0
    multi = [s for s in sig_pool if len(s) >= 2]
    while checked < 100:
        n = rng.randint(2, 6)
        g = random_graph(rng, n, 0.8)
        parts = rng.choice(multi)
        if not arrows(g, parts):
            continue
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if not g.has_edge(u, v)]
        extra = [rng.choice(non_edges)] if non_edges else []
        assert arrows(from_edges(n, list(g.edges()) + extra), parts)
        checked += 1

    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        parts = list(rng.choice(multi))
        shuffled = parts[:]
        rng.shuffle(shuffled)
        assert arrows(g, parts) == arrows(g, shuffled)

    for _ in range(80):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.random())
        r = rng.randint(2, 4)
        assert arrows(g, [2] * r) == (not properly_colorable(g, r))

    elapsed = time.perf_counter() - started
    print("ACCEPTANCE 6 oracle equivalence suite: PASS (500 verdicts, 100 monotone, "
          f"100 permuted, chromatic cross-check, {elapsed:.2f}s)")


def test_acceptance_7_performance_gate():
    g14 = join(complete(3), complement(cycle(11)))
    started = time.perf_counter()
    for parts in ([3, 5], [4, 4]):
        assert find_free_coloring(g14, parts).verdict == ARROWS
    t14 = time.perf_counter() - started
    assert t14 < 1.0, f"14-vertex r=2 decisions took {t14:.3f}s"

    g10 = join(complete(3), complement(cycle(7)))
    parts10 = (2, 2, 3)
    best_engine = min(
        _timed(lambda: find_free_coloring(g10, parts10))[0] for _ in range(3))
    assert best_engine < 5.0
    t_naive, free = _timed(lambda: naive_find_free(g10, parts10))
    assert free is None  # both must agree the graph arrows
    factor = t_naive / max(best_engine, 1e-7)
    assert factor >= 5.0, f"pruning speedup only {factor:.1f}x"
    print(f"ACCEPTANCE 7 performance gate: PASS (14v r2 {t14 * 1000:.0f}ms, "
          f"10v r3 {best_engine * 1000:.1f}ms, naive {t_naive * 1000:.0f}ms, "
          f"speedup {factor:.0f}x)")


def _timed(fn):
    started = time.perf_counter()
    value = fn()
    return time.perf_counter() - started, value


def test_acceptance_8_io_round_trip_and_table():
    rng = random.Random(99999)
    corpus = [complete(0), complete(1), complete(6), cycle(5), cycle(9),
              join(complete(2), cycle(5)), complement(cycle(11))]
    corpus += [random_graph(rng, rng.randint(0, 14), rng.random()) for _ in range(80)]
    corpus.append(random_graph(rng, 63, 0.25))
    for g in corpus:
        assert parse_graph6(serialize_graph6(g)) == g
        assert parse_edge_list(serialize_edge_list(g)) == g

    cited = {
        ((3, 4), 5): "[6]",
        ((2, 2, 4), 5): "[7]",
        ((2, 2, 3), 4): "[2]",
        ((2, 2, 6), 7): "[9]",
        ((2, 2, 7), 8): "[9]",
    }
    for (parts, q), tag in cited.items():
        lower, upper, citations = TABLE.combined(normalize(list(parts)), q)
        assert upper is not None
        assert any(tag in c for c in citations), f"citation {tag} missing for {parts};{q}"
    best = best_bounds([2, 2, 4], 5, TABLE)
    assert best.exact and best.lower == 13
    print(f"ACCEPTANCE 8 I/O round-trip and table: PASS ({len(corpus)} graphs, "
          "5 cited entries intact)")
