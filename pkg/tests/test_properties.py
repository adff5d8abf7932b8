"""Property suites over seeded random instances."""

from hypothesis import given, settings, strategies as st

from vinebound import (
    Graph,
    analyze,
    circumference_bound_squared,
    decompose,
    enumerate_vines,
    find_min_vine,
    is_connected,
    is_two_connected,
    longest_cycle,
    longest_cycle_oracle,
    longest_path,
    longest_path_oracle,
    parse_graph,
    random_two_connected,
    serialize_graph,
    validate_cycle,
    validate_path,
    verify_vine,
)

from bruteforce import brute_two_connected


edge_sets = st.integers(3, 9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
            max_size=n * 3,
        ),
    )
)

two_connected_params = st.tuples(
    st.integers(3, 11), st.integers(0, 12), st.integers(0, 2**32)
)


@given(edge_sets)
@settings(max_examples=60, deadline=None)
def test_serialize_parse_round_trip(params):
    n, edges = params
    g = Graph(n, edges)
    assert parse_graph(serialize_graph(g)) == g
    # canonical form is a fixed point
    assert serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g)


@given(edge_sets)
@settings(max_examples=60, deadline=None)
def test_two_connectivity_matches_definition(params):
    n, edges = params
    g = Graph(n, edges)
    assert is_two_connected(g) == brute_two_connected(g)


@given(edge_sets)
@settings(max_examples=40, deadline=None)
def test_search_matches_oracle(params):
    n, edges = params
    g = Graph(n, edges)
    if is_connected(g) and g.n >= 2 and g.edges:
        p = longest_path(g)
        assert p.length == longest_path_oracle(g)
        assert p.length <= g.n - 1
        validate_path(g, p.vertices)
    if is_two_connected(g):
        cyc = longest_cycle(g)
        assert cyc.length == longest_cycle_oracle(g)
        assert cyc.length <= g.n
        validate_cycle(g, cyc.vertices)


@given(two_connected_params)
@settings(max_examples=50, deadline=None)
def test_vines_verify_and_min_is_first(params):
    n, extra, seed = params
    g, _ = random_two_connected(n, extra, seed)
    p = longest_path(g)
    vine = find_min_vine(g, p)
    assert verify_vine(g, vine).ok
    enum = enumerate_vines(g, p, max_count=100)
    assert enum.vines, "at least one vine exists on any path of a 2-connected graph"
    assert enum.vines[0].m == vine.m
    for v in enum.vines:
        assert verify_vine(g, v).ok


@given(two_connected_params)
@settings(max_examples=50, deadline=None)
def test_bound_invariants_on_random_instances(params):
    n, extra, seed = params
    g, _ = random_two_connected(n, extra, seed)
    r = analyze(g)
    assert r.ok, r.violations
    assert r.slack >= 0 and r.c >= r.m + 2
    assert r.c * r.c >= circumference_bound_squared(r.l, r.slack, r.m)
    assert r.q0_len <= r.c
    assert all(q <= r.c for q in r.qj_lens)
    if r.qstar_len is not None:
        assert r.qstar_len <= r.c
    # corollary chain: main bound -> sharp Dirac form -> Dirac bound
    assert not r.bound_met or r.dirac.conjecture_a
    assert not r.dirac.conjecture_a or r.dirac.theorem_a


@given(two_connected_params)
@settings(max_examples=40, deadline=None)
def test_every_vine_satisfies_bound_and_tiling(params):
    n, extra, seed = params
    g, _ = random_two_connected(n, extra, seed)
    p = longest_path(g)
    l = p.length
    c = longest_cycle(g).length
    for vine in enumerate_vines(g, p, max_count=60).vines:
        slack = c - vine.m - 2
        assert slack >= 0
        assert c * c >= circumference_bound_squared(l, slack, vine.m)
        if vine.m >= 2:
            d = decompose(vine)
            assert sum(d.a) + sum(d.b) == l


@given(two_connected_params)
@settings(max_examples=25, deadline=None)
def test_analyze_is_deterministic(params):
    n, extra, seed = params
    g, _ = random_two_connected(n, extra, seed)
    a = analyze(g)
    b = analyze(g)
    assert a.path.vertices == b.path.vertices
    assert a.cycle.vertices == b.cycle.vertices
    assert [e.vertices for e in a.vine.ears] == [e.vertices for e in b.vine.ears]
    assert (a.l, a.c, a.m, a.slack, a.bound) == (b.l, b.c, b.m, b.slack, b.bound)
