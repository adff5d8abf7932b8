"""Independent brute-force oracles for small graphs.

These deliberately avoid the package's search and DP code: plain
exhaustive enumeration, used to compute and freeze expected test values.
"""

from __future__ import annotations

from vinebound import Graph


def brute_connected(g: Graph, removed: int | None = None) -> bool:
    keep = [v for v in range(g.n) if v != removed]
    if not keep:
        return True
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors[v]:
            if w != removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keep)


def brute_two_connected(g: Graph) -> bool:
    """Definition check: n >= 3, connected, and no single removal disconnects."""
    if g.n < 3:
        return False
    if not brute_connected(g):
        return False
    return all(brute_connected(g, removed=v) for v in range(g.n))


def iter_simple_paths(g: Graph):
    """Every directed simple path with at least one edge."""
    trail: list[int] = []
    results: list[tuple[int, ...]] = []

    def extend(v: int, seen: set[int]) -> None:
        for w in g.neighbors[v]:
            if w not in seen:
                trail.append(w)
                seen.add(w)
                results.append(tuple(trail))
                extend(w, seen)
                seen.remove(w)
                trail.pop()

    for s in range(g.n):
        trail[:] = [s]
        extend(s, {s})
    return results


def brute_longest_path_length(g: Graph) -> int:
    best = 0
    for seq in iter_simple_paths(g):
        best = max(best, len(seq) - 1)
    return best


def brute_longest_path_witness(g: Graph) -> tuple[int, ...]:
    """The tie-break contract, recomputed independently: the smallest
    directed sequence among all optimal paths and their reversals."""
    best_len = brute_longest_path_length(g)
    candidates = [seq for seq in iter_simple_paths(g) if len(seq) - 1 == best_len]
    return min(candidates)


def iter_simple_cycles(g: Graph):
    """Every cycle once, as the canonical (min-rooted, lex-min direction)
    vertex tuple."""
    results: set[tuple[int, ...]] = set()
    trail: list[int] = []

    def extend(root: int, v: int, seen: set[int]) -> None:
        for w in g.neighbors[v]:
            if w == root and len(trail) >= 3:
                seq = tuple(trail)
                results.add(min(seq, (seq[0],) + seq[:0:-1]))
            elif w > root and w not in seen:
                trail.append(w)
                seen.add(w)
                extend(root, w, seen)
                seen.remove(w)
                trail.pop()

    for root in range(g.n):
        trail[:] = [root]
        extend(root, root, {root})
    return sorted(results)


def brute_longest_cycle_length(g: Graph) -> int:
    best = 0
    for seq in iter_simple_cycles(g):
        best = max(best, len(seq))
    return best


def brute_longest_cycle_witness(g: Graph) -> tuple[int, ...]:
    """Canonical form of the optimal cycle per the tie-break contract."""
    best_len = brute_longest_cycle_length(g)
    return min(seq for seq in iter_simple_cycles(g) if len(seq) == best_len)
