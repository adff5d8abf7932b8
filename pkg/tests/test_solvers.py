import pytest

from vinebound import (
    Graph,
    PreconditionError,
    SolveBudgetError,
    SolveLimits,
    all_longest_paths,
    canonical_cycle,
    is_connected,
    is_two_connected,
    longest_cycle,
    longest_cycle_oracle,
    longest_path,
    longest_path_oracle,
    validate_cycle,
    validate_path,
)

from bruteforce import (
    brute_longest_cycle_length,
    brute_longest_cycle_witness,
    brute_longest_path_length,
    brute_longest_path_witness,
)
from conftest import complete_graph, cycle_graph, path_graph


def test_longest_path_k4(k4):
    p = longest_path(k4)
    assert p.length == 3
    # tie-break recomputed by brute force over all 4!/2 optimal sequences
    assert p.vertices == brute_longest_path_witness(k4) == (0, 1, 2, 3)


def test_longest_path_c5(c5):
    p = longest_path(c5)
    assert p.length == 4
    assert p.vertices == (0, 1, 2, 3, 4)


def test_longest_path_x2(x2):
    p = longest_path(x2)
    assert p.length == brute_longest_path_length(x2) == 6
    assert p.vertices == (0, 1, 2, 3, 4, 5, 6)


def test_longest_path_two_vertices():
    p = longest_path(Graph(2, [(0, 1)]))
    assert p.vertices == (0, 1)


def test_longest_path_preconditions():
    with pytest.raises(PreconditionError):
        longest_path(Graph(1))
    with pytest.raises(PreconditionError):
        longest_path(Graph(4, [(0, 1), (2, 3)]))


def test_longest_cycle_fixtures(triangle, x1, x2):
    assert longest_cycle(triangle).length == 3
    assert longest_cycle(x1).length == brute_longest_cycle_length(x1) == 4
    assert longest_cycle(x2).length == brute_longest_cycle_length(x2) == 5


def test_longest_cycle_canonical_tie_break(x1, x2, theta):
    for g in (x1, x2, theta):
        cyc = longest_cycle(g)
        assert cyc.vertices == canonical_cycle(cyc.vertices)
        assert cyc.vertices == brute_longest_cycle_witness(g)


def test_longest_cycle_requires_two_connected():
    with pytest.raises(PreconditionError):
        longest_cycle(path_graph(4))


def test_oracles_on_fixtures(k4, c5, theta):
    assert longest_path_oracle(k4) == 3
    assert longest_cycle_oracle(k4) == 4
    assert longest_path_oracle(theta) == 4
    assert longest_cycle_oracle(theta) == 4
    assert longest_path_oracle(c5) == 4
    assert longest_cycle_oracle(c5) == 5


def test_oracle_cap():
    g = cycle_graph(17)
    with pytest.raises(PreconditionError):
        longest_path_oracle(g)
    assert longest_path_oracle(g, max_vertices=17) == 16


def test_oracle_no_cycle_returns_zero():
    assert longest_cycle_oracle(path_graph(5)) == 0


def test_solvers_match_brute_force_on_seeded_graphs():
    import random

    rng = random.Random(981)
    checked = 0
    for _ in range(60):
        n = rng.randint(4, 8)
        possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [e for e in possible if rng.random() < 0.5]
        g = Graph(n, edges)
        if not g.edges:
            continue
        assert longest_path_oracle(g) == brute_longest_path_length(g)
        assert longest_cycle_oracle(g) == brute_longest_cycle_length(g)
        if is_connected(g) and g.n >= 2:
            p = longest_path(g)
            assert p.length == brute_longest_path_length(g)
            assert p.vertices == brute_longest_path_witness(g)
        if is_two_connected(g):
            cyc = longest_cycle(g)
            assert cyc.length == brute_longest_cycle_length(g)
            assert cyc.vertices == brute_longest_cycle_witness(g)
        checked += 1
    assert checked >= 40


def test_witnesses_revalidate(x2):
    p = longest_path(x2)
    cyc = longest_cycle(x2)
    assert validate_path(x2, p.vertices).vertices == p.vertices
    assert validate_cycle(x2, cyc.vertices).vertices == cyc.vertices


def test_budget_exhaustion_carries_incumbent():
    g = complete_graph(9)
    with pytest.raises(SolveBudgetError) as err:
        longest_path(g, SolveLimits(node_budget=25, time_budget=60.0))
    incumbent = err.value.incumbent
    assert incumbent is not None
    # best-so-far is a real path of g but carries no optimality claim
    assert validate_path(g, incumbent.vertices).length <= 8
    with pytest.raises(SolveBudgetError):
        longest_cycle(g, SolveLimits(node_budget=25, time_budget=60.0))


def test_big_budget_matches_oracle():
    # with room to complete, the search returns exactly the oracle value
    g = complete_graph(7)
    limits = SolveLimits(node_budget=10_000_000, time_budget=60.0)
    assert longest_path(g, limits).length == longest_path_oracle(g) == 6
    assert longest_cycle(g, limits).length == longest_cycle_oracle(g) == 7


def test_determinism_repeated_solves(x2):
    runs = [longest_path(x2).vertices for _ in range(3)]
    assert len(set(runs)) == 1
    runs_c = [longest_cycle(x2).vertices for _ in range(3)]
    assert len(set(runs_c)) == 1


def test_all_longest_paths_counts(c5, x2):
    paths = all_longest_paths(c5)
    assert len(paths) == 5  # one per removed edge of the 5-cycle
    assert all(p.length == 4 for p in paths)
    spine_list = all_longest_paths(x2)
    assert any(p.vertices == (0, 1, 2, 3, 4, 5, 6) for p in spine_list)


def test_all_longest_paths_cap():
    with pytest.raises(PreconditionError):
        all_longest_paths(cycle_graph(11))


def test_limits_validation():
    with pytest.raises(PreconditionError):
        SolveLimits(node_budget=0)
    with pytest.raises(PreconditionError):
        SolveLimits(time_budget=-1)
