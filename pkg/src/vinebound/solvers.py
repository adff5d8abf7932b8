"""Exact longest-path and longest-cycle computation at desk scale.

Two independent method families live here on purpose:

* ``longest_path`` / ``longest_cycle`` run a two-phase depth-first branch
  and bound. Phase one certifies the optimal length; phase two re-searches
  in lexicographic order and stops at the first witness of that length,
  which pins the deterministic tie-break contract exactly.
* ``longest_path_oracle`` / ``longest_cycle_oracle`` are bitmask dynamic
  programs over (vertex subset, endpoint) states. They share no code with
  the search and return lengths only; they exist to cross-check it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import InternalInvariantError, PreconditionError, SolveBudgetError
from .graphs import (
    Graph,
    Path,
    Cycle,
    is_connected,
    two_connectivity_failure,
    validate_cycle,
    validate_path,
)


@dataclass(frozen=True)
class SolveLimits:
    """Resource caps for one exact solve."""

    max_vertices: int = 16
    node_budget: int = 50_000_000
    time_budget: float = 60.0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.node_budget <= 0 or self.time_budget <= 0:
            raise PreconditionError("all solve limits must be positive")


DEFAULT_LIMITS = SolveLimits()


class _BudgetHit(Exception):
    pass


class _Budget:
    """Node/time accounting shared by both phases of one solve."""

    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, limits: SolveLimits):
        self.nodes = 0
        self.limit = limits.node_budget
        self.deadline = time.monotonic() + limits.time_budget

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise _BudgetHit("node budget exhausted")
        if not (self.nodes & 0xFFF) and time.monotonic() > self.deadline:
            raise _BudgetHit("time budget exhausted")


def _reachable_from(adj: tuple[int, ...], v: int, blocked: int) -> int:
    """Bitmask of vertices reachable from v without entering blocked ones."""
    seen = 0
    frontier = adj[v] & ~blocked
    while frontier:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & ~blocked & ~seen
    return seen


def longest_path(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> Path:
    """Longest simple path of a connected graph with n >= 2.

    Tie-break: among all optimal paths the returned vertex sequence is the
    lexicographically smallest after orientation normalization (a sequence
    is kept in whichever direction compares smaller).
    """
    if g.n < 2:
        raise PreconditionError(f"longest_path needs at least two vertices, got n={g.n}")
    if not is_connected(g):
        raise PreconditionError("longest_path requires a connected graph")
    adj = g.adjacency_bits
    nbrs = g.neighbors
    budget = _Budget(limits)
    best_len = 0
    best_seq: list[int] = [0]
    stack: list[int] = []

    def grow(v: int, visited: int, length: int) -> None:
        nonlocal best_len, best_seq
        budget.spend()
        if length > best_len:
            best_len = length
            best_seq = stack.copy()
        if length + _reachable_from(adj, v, visited).bit_count() <= best_len:
            return
        for w in nbrs[v]:
            if not visited >> w & 1:
                stack.append(w)
                grow(w, visited | 1 << w, length + 1)
                stack.pop()

    witness: list[int] | None = None

    def refind(v: int, visited: int, length: int) -> bool:
        nonlocal witness
        budget.spend()
        if length == best_len:
            witness = stack.copy()
            return True
        if length + _reachable_from(adj, v, visited).bit_count() < best_len:
            return False
        for w in nbrs[v]:
            if not visited >> w & 1:
                stack.append(w)
                if refind(w, visited | 1 << w, length + 1):
                    return True
                stack.pop()
        return False

    try:
        for s in range(g.n):
            stack[:] = [s]
            grow(s, 1 << s, 0)
        for s in range(g.n):
            stack[:] = [s]
            if refind(s, 1 << s, 0):
                break
    except _BudgetHit as hit:
        raise SolveBudgetError(
            f"longest_path: {hit}; best non-optimal path has length {best_len}",
            incumbent=validate_path(g, best_seq),
        ) from None
    if witness is None:
        raise InternalInvariantError("longest_path: certified length has no witness")
    return validate_path(g, witness)


def longest_cycle(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> Cycle:
    """Longest simple cycle of a 2-connected graph.

    Tie-break: the canonical rotation/reflection starting at the smallest
    vertex, then lexicographically smallest.
    """
    failure = two_connectivity_failure(g)
    if failure is not None:
        raise PreconditionError(f"longest_cycle requires a 2-connected graph: {failure}")
    adj = g.adjacency_bits
    nbrs = g.neighbors
    budget = _Budget(limits)
    best_len = 0
    best_seq: list[int] | None = None
    stack: list[int] = []

    def grow(root: int, rootbit: int, blocked_low: int, v: int, visited: int, count: int) -> None:
        nonlocal best_len, best_seq
        budget.spend()
        if count >= 3 and adj[v] & rootbit and count > best_len:
            best_len = count
            best_seq = stack.copy()
        reach = _reachable_from(adj, v, visited | blocked_low)
        if count + reach.bit_count() <= best_len:
            return
        if not adj[root] & reach:
            return
        for w in nbrs[v]:
            if w > root and not visited >> w & 1:
                stack.append(w)
                grow(root, rootbit, blocked_low, w, visited | 1 << w, count + 1)
                stack.pop()

    witness: list[int] | None = None

    def refind(root: int, rootbit: int, blocked_low: int, v: int, visited: int, count: int) -> bool:
        nonlocal witness
        budget.spend()
        if count == best_len:
            if adj[v] & rootbit:
                witness = stack.copy()
                return True
            return False
        reach = _reachable_from(adj, v, visited | blocked_low)
        if count + reach.bit_count() < best_len:
            return False
        if not adj[root] & reach:
            return False
        for w in nbrs[v]:
            if w > root and not visited >> w & 1:
                stack.append(w)
                if refind(root, rootbit, blocked_low, w, visited | 1 << w, count + 1):
                    return True
                stack.pop()
        return False

    try:
        for root in range(g.n - 2):
            rootbit = 1 << root
            blocked_low = rootbit - 1
            stack[:] = [root]
            grow(root, rootbit, blocked_low, root, rootbit, 1)
        if best_seq is None:
            raise InternalInvariantError("longest_cycle: no cycle found in a 2-connected graph")
        for root in range(g.n - 2):
            rootbit = 1 << root
            blocked_low = rootbit - 1
            stack[:] = [root]
            if refind(root, rootbit, blocked_low, root, rootbit, 1):
                break
    except _BudgetHit as hit:
        incumbent = validate_cycle(g, best_seq) if best_seq is not None else None
        raise SolveBudgetError(
            f"longest_cycle: {hit}; best non-optimal cycle has length {best_len}",
            incumbent=incumbent,
        ) from None
    if witness is None:
        raise InternalInvariantError("longest_cycle: certified length has no witness")
    return validate_cycle(g, witness)


def longest_path_oracle(g: Graph, max_vertices: int = 16) -> int:
    """Exact longest-path length by subset DP over (visited set, endpoint).

    Intentionally disjoint from the branch-and-bound code path; used to
    cross-validate it on small instances.
    """
    if g.n > max_vertices:
        raise PreconditionError(f"oracle capped at {max_vertices} vertices, got n={g.n}")
    if g.n == 0:
        raise PreconditionError("oracle needs at least one vertex")
    n = g.n
    adj = g.adjacency_bits
    endpoints = [0] * (1 << n)
    for v in range(n):
        endpoints[1 << v] = 1 << v
    best = 0
    for mask in range(1, 1 << n):
        eps = endpoints[mask]
        if not eps:
            continue
        size = mask.bit_count()
        if size - 1 > best:
            best = size - 1
        e = eps
        while e:
            vbit = e & -e
            e ^= vbit
            ext = adj[vbit.bit_length() - 1] & ~mask
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                endpoints[mask | wbit] |= wbit
    return best


def longest_cycle_oracle(g: Graph, max_vertices: int = 16) -> int:
    """Exact circumference by subset DP rooted at each subset's minimum
    vertex; returns 0 when the graph has no cycle."""
    if g.n > max_vertices:
        raise PreconditionError(f"oracle capped at {max_vertices} vertices, got n={g.n}")
    if g.n == 0:
        raise PreconditionError("oracle needs at least one vertex")
    n = g.n
    adj = g.adjacency_bits
    endpoints = [0] * (1 << n)
    for v in range(n):
        endpoints[1 << v] = 1 << v
    best = 0
    for mask in range(1, 1 << n):
        eps = endpoints[mask]
        if not eps:
            continue
        rootbit = mask & -mask
        root = rootbit.bit_length() - 1
        size = mask.bit_count()
        if size >= 3 and size > best and eps & adj[root] & ~rootbit:
            best = size
        above_root = ~((rootbit << 1) - 1)
        e = eps
        while e:
            vbit = e & -e
            e ^= vbit
            ext = adj[vbit.bit_length() - 1] & ~mask & above_root
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                endpoints[mask | wbit] |= wbit
    return best


def all_longest_paths(g: Graph, max_vertices: int = 10) -> list[Path]:
    """Every longest path, orientation-normalized and deduplicated, in
    lexicographic order. Exhaustive, so capped to small graphs."""
    if g.n > max_vertices:
        raise PreconditionError(f"exhaustive path listing capped at {max_vertices} vertices")
    if g.n < 2:
        raise PreconditionError("needs at least two vertices")
    target = longest_path_oracle(g, max_vertices=max_vertices)
    adj = g.adjacency_bits
    nbrs = g.neighbors
    found: set[tuple[int, ...]] = set()
    stack: list[int] = []

    def walk(v: int, visited: int, length: int) -> None:
        if length == target:
            seq = tuple(stack)
            found.add(min(seq, seq[::-1]))
            return
        if length + _reachable_from(adj, v, visited).bit_count() < target:
            return
        for w in nbrs[v]:
            if not visited >> w & 1:
                stack.append(w)
                walk(w, visited | 1 << w, length + 1)
                stack.pop()

    for s in range(g.n):
        stack[:] = [s]
        walk(s, 1 << s, 0)
    return [validate_path(g, seq) for seq in sorted(found)]
