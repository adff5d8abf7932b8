import pytest

from vinebound import (
    ExtremalSpec,
    FuzzConfig,
    Graph,
    PreconditionError,
    analyze,
    extremal_cycle_length,
    extremal_graph,
    extremal_path_length,
    extremal_segment_lengths,
    fuzz_campaign,
    is_two_connected,
    longest_cycle,
    longest_path,
    random_two_connected,
    serialize_graph,
    verify_vine,
)

from conftest import triangle_graph, x1_graph, x2_graph


# ------------------------------------------------------------------
# extremal construction
# ------------------------------------------------------------------

def test_extremal_m3_is_x2():
    g, spine, vine = extremal_graph(ExtremalSpec(3, 0))
    assert g == x2_graph()
    assert spine.vertices == tuple(range(7))
    assert [(e.x_attach, e.y_attach) for e in vine.ears] == [(0, 3), (1, 5), (3, 6)]


def test_extremal_m2_is_x1():
    g, spine, vine = extremal_graph(ExtremalSpec(2, 0))
    assert g == x1_graph()
    assert [(e.x_attach, e.y_attach) for e in vine.ears] == [(0, 3), (1, 4)]


def test_extremal_m5_values():
    spec = ExtremalSpec(5, 0)
    a, b = extremal_segment_lengths(spec)
    assert a == (1, 0, 0, 0, 1)
    assert b == (2, 3, 3, 2)
    g, spine, vine = extremal_graph(spec)
    assert spine.length == extremal_path_length(spec) == 12
    assert longest_cycle(g).length == extremal_cycle_length(spec) == 7
    assert 7 * 7 == 4 * 12 + 1  # bound attained exactly


def test_extremal_closed_forms_match_construction():
    for m in range(2, 7):
        for slack in (0, 2, 4, 6):
            spec = ExtremalSpec(m, slack)
            a, b = extremal_segment_lengths(spec)
            assert sum(a) + sum(b) == extremal_path_length(spec)


def test_extremal_vine_verifies():
    for m, slack in [(2, 0), (3, 2), (4, 0), (5, 4), (6, 2)]:
        g, spine, vine = extremal_graph(ExtremalSpec(m, slack))
        assert verify_vine(g, vine).ok
        assert is_two_connected(g)


def test_extremal_spine_is_longest_path():
    for m, slack in [(2, 2), (3, 0), (4, 2)]:
        g, spine, vine = extremal_graph(ExtremalSpec(m, slack))
        assert longest_path(g).vertices == spine.vertices


def test_extremal_tightness_exact_integer():
    for m, slack in [(2, 0), (2, 4), (3, 0), (3, 2), (4, 0), (5, 2)]:
        spec = ExtremalSpec(m, slack)
        l = extremal_path_length(spec)
        c = extremal_cycle_length(spec)
        expected = 4 * l + (slack + 1) ** 2 - (1 if m % 2 == 0 else 0)
        assert c * c == expected


def test_extremal_rejects_bad_specs():
    with pytest.raises(PreconditionError):
        ExtremalSpec(1, 0)
    with pytest.raises(PreconditionError):
        ExtremalSpec(3, 1)  # odd slack: construction halves it
    with pytest.raises(PreconditionError):
        ExtremalSpec(3, -2)


def test_extremal_analyze_reports_construction_parameters():
    for m, slack in [(2, 2), (3, 2), (4, 0)]:
        g, _, _ = extremal_graph(ExtremalSpec(m, slack))
        r = analyze(g)
        assert (r.m, r.slack) == (m, slack)
        assert r.tight and r.ok


# ------------------------------------------------------------------
# random generator
# ------------------------------------------------------------------

def test_random_triangle():
    g, placed = random_two_connected(3, 0, seed=123)
    assert g == triangle_graph()
    assert placed == 0


def test_random_pure_cycle_values():
    for n in (4, 6, 9):
        g, _ = random_two_connected(n, 0, seed=5)
        assert g.edge_count == n
        assert longest_path(g).length == n - 1
        assert longest_cycle(g).length == n


def test_random_generator_pinned_output():
    # frozen bytes: catches accidental RNG or canonicalization changes
    g, placed = random_two_connected(8, 4, 42)
    assert placed == 4 and g.edge_count == 12
    assert serialize_graph(g) == (
        "8 12\n0 1\n0 4\n0 5\n0 6\n1 3\n2 5\n2 7\n3 4\n3 5\n4 6\n4 7\n6 7\n"
    )
    g2, _ = random_two_connected(5, 2, 7)
    assert serialize_graph(g2) == "5 7\n0 1\n0 3\n0 4\n1 2\n1 3\n2 4\n3 4\n"


def test_random_generator_deterministic():
    a, _ = random_two_connected(10, 6, 999)
    b, _ = random_two_connected(10, 6, 999)
    assert a == b
    c, _ = random_two_connected(10, 6, 1000)
    assert a != c


def test_random_generator_always_two_connected():
    for seed in range(50):
        g, _ = random_two_connected(3 + seed % 10, seed % 7, seed)
        assert is_two_connected(g)


def test_random_generator_saturation():
    g, placed = random_two_connected(4, 100, seed=1)
    assert placed == 2  # K4 reached: only 2 chords exist beyond the 4-cycle
    assert g.edge_count == 6


def test_random_generator_preconditions():
    with pytest.raises(PreconditionError):
        random_two_connected(2, 0, seed=1)
    with pytest.raises(PreconditionError):
        random_two_connected(5, -1, seed=1)


# ------------------------------------------------------------------
# fuzz campaign
# ------------------------------------------------------------------

def test_fuzz_single_triangle():
    report = fuzz_campaign(FuzzConfig(count=1, n_min=3, n_max=3, seed=1))
    assert report.passed == 1 and report.failed == 0
    record = report.records[0]
    assert record.n == 3 and record.l == 2 and record.c == 3 and record.m == 1


def test_fuzz_small_campaign_clean():
    report = fuzz_campaign(FuzzConfig(count=40, n_min=4, n_max=10, seed=7))
    assert report.ok
    assert all(r.ok and r.graph_text is None for r in report.records)
    assert all(r.oracle_checked for r in report.records)


def test_fuzz_campaign_deterministic():
    cfg = FuzzConfig(count=10, n_min=4, n_max=9, seed=77)
    a = fuzz_campaign(cfg)
    b = fuzz_campaign(cfg)
    assert [r.seed for r in a.records] == [r.seed for r in b.records]
    assert [(r.l, r.c, r.m, r.slack) for r in a.records] == [
        (r.l, r.c, r.m, r.slack) for r in b.records
    ]


def test_fuzz_parallel_matches_sequential():
    seq = fuzz_campaign(FuzzConfig(count=6, n_min=4, n_max=8, seed=13, jobs=1))
    par = fuzz_campaign(FuzzConfig(count=6, n_min=4, n_max=8, seed=13, jobs=2))
    strip = lambda rep: [(r.index, r.seed, r.l, r.c, r.m, r.slack, r.violations) for r in rep.records]
    assert strip(seq) == strip(par)


def test_fuzz_pure_cycles_tight_for_single_ear():
    # on pure cycles the single-ear bound is attained exactly: c = n
    report = fuzz_campaign(FuzzConfig(count=10, n_min=3, n_max=12, seed=3, extra_min=0, extra_max=0))
    assert report.ok
    for r in report.records:
        assert r.m == 1 and r.tight
        assert r.c == r.n and r.l == r.n - 1
        assert r.c * r.c == 4 * r.l + (r.slack + 1) ** 2


def test_fuzz_config_validation():
    with pytest.raises(PreconditionError):
        FuzzConfig(count=0, n_min=3, n_max=5, seed=1)
    with pytest.raises(PreconditionError):
        FuzzConfig(count=1, n_min=2, n_max=5, seed=1)
    with pytest.raises(PreconditionError):
        FuzzConfig(count=1, n_min=5, n_max=3, seed=1)
    with pytest.raises(PreconditionError):
        FuzzConfig(count=1, n_min=3, n_max=5, seed=1, extra_min=4, extra_max=2)
