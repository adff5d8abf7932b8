"""Ears and vines on a reference path.

An ear is a path that meets the reference path P exactly at its two
endpoints. A vine L_1..L_m is an ordered family of internally disjoint
ears whose attachment points interleave along P:

    x_1 < x_2 < y_1 <= x_3 < y_2 <= x_4 < ... <= x_m < y_{m-1} < y_m

with x_1 at P's first vertex and y_m at its last (for m = 1 the single
ear attaches exactly at P's endpoints). Positions refer to P's order;
x_i/y_i are ear i's first/second attachment in that order.

Every 2-connected graph admits a vine on every path; ``find_min_vine``
relies on that and treats exhaustion as an internal error.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    EarCapError,
    InternalInvariantError,
    PathValidationError,
    PreconditionError,
    VineSearchCapError,
)
from .graphs import Graph, Path, require_two_connected, validate_path

DEFAULT_EAR_CAP = 100_000
DEFAULT_STATE_CAP = 1_000_000


@dataclass(frozen=True)
class Ear:
    """Attachment-to-attachment vertex sequence, oriented so the first
    attachment precedes the second on the reference path."""

    vertices: tuple[int, ...]

    def __init__(self, vertices):
        vs = tuple(vertices)
        if len(vs) < 2:
            raise ValueError("an ear needs at least two vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("ear vertices must be distinct")
        object.__setattr__(self, "vertices", vs)

    @property
    def x_attach(self) -> int:
        return self.vertices[0]

    @property
    def y_attach(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Vine:
    """Ordered ear family on a base path; validity is checked by verify_vine."""

    base: Path
    ears: tuple[Ear, ...]

    def __init__(self, base: Path, ears):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "ears", tuple(ears))

    @property
    def m(self) -> int:
        return len(self.ears)


@dataclass(frozen=True)
class VineVerdict:
    """Pass/fail outcome of verify_vine; on failure names the first
    violated clause and the offending ear indices (1-based)."""

    ok: bool
    clause: str | None = None
    detail: str = ""
    ear_indices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class VineEnumeration:
    vines: tuple[Vine, ...]
    truncated: bool


def _position_map(p: Path) -> dict[int, int]:
    return {v: i for i, v in enumerate(p.vertices)}


def enumerate_ears(g: Graph, p: Path, cap: int = DEFAULT_EAR_CAP) -> list[Ear]:
    """All ears on p, ordered by (first attachment position, second
    attachment position, interior sequence).

    Single edges of p itself are excluded: the strict inequalities in the
    interleaving chain make them unusable in any vine, so dropping them
    here only shrinks the search space.
    """
    validate_path(g, p.vertices)
    pos = _position_map(p)
    on_path = set(p.vertices)
    nbrs = g.neighbors
    ears: list[Ear] = []

    def record(vertices: tuple[int, ...]) -> None:
        if len(ears) >= cap:
            raise EarCapError(cap, len(ears))
        ears.append(Ear(vertices))

    for u in p.vertices:
        for w in nbrs[u]:
            if w in on_path:
                # chord: skip edges of p (position gap 1) and emit once (u before w)
                if pos[w] > pos[u] + 1:
                    record((u, w))
                continue
            # walk through off-path vertices
            trail = [u, w]
            visited = {w}

            def dive() -> None:
                z = trail[-1]
                for t in nbrs[z]:
                    if t in on_path:
                        if t != u and pos[t] > pos[u]:
                            record(tuple(trail) + (t,))
                    elif t not in visited:
                        visited.add(t)
                        trail.append(t)
                        dive()
                        trail.pop()
                        visited.remove(t)

            dive()
    ears.sort(key=lambda e: (pos[e.x_attach], pos[e.y_attach], e.interior))
    return ears


def _chain_failure(pos: dict[int, int], ears: tuple[Ear, ...], last_pos: int) -> str | None:
    """First broken link of the interleaving chain, or None if it holds.

    Assumes every attachment is on the path (callers check that first).
    """
    m = len(ears)
    xs = [pos[e.x_attach] for e in ears]
    ys = [pos[e.y_attach] for e in ears]
    for i in range(m):
        if xs[i] >= ys[i]:
            return f"ear {i + 1} attachments are not oriented along the path"
    if xs[0] != 0:
        return f"x_1 must be the path's first vertex, ear 1 starts at position {xs[0]}"
    if ys[m - 1] != last_pos:
        return f"y_{m} must be the path's last vertex, ear {m} ends at position {ys[m - 1]}"
    if m == 1:
        return None
    if not xs[0] < xs[1]:
        return f"need x_1 < x_2, got positions {xs[0]}, {xs[1]}"
    if not xs[1] < ys[0]:
        return f"need x_2 < y_1, got positions {xs[1]}, {ys[0]}"
    for k in range(1, m - 1):
        # 1-based: y_k <= x_{k+2} < y_{k+1}
        if not ys[k - 1] <= xs[k + 1]:
            return f"need y_{k} <= x_{k + 2}, got positions {ys[k - 1]}, {xs[k + 1]}"
        if not xs[k + 1] < ys[k]:
            return f"need x_{k + 2} < y_{k + 1}, got positions {xs[k + 1]}, {ys[k]}"
    if not ys[m - 2] < ys[m - 1]:
        return f"need y_{m - 1} < y_{m}, got positions {ys[m - 2]}, {ys[m - 1]}"
    return None


def verify_vine(g: Graph, vine: Vine) -> VineVerdict:
    """Check every vine condition; report the first violated clause."""
    p = vine.base
    try:
        validate_path(g, p.vertices)
    except PathValidationError as exc:
        return VineVerdict(False, "base", f"base path invalid: {exc}")
    if vine.m == 0:
        return VineVerdict(False, "empty", "a vine needs at least one ear")
    pos = _position_map(p)
    on_path = set(p.vertices)
    for i, ear in enumerate(vine.ears, start=1):
        try:
            validate_path(g, ear.vertices)
        except PathValidationError as exc:
            return VineVerdict(False, "ear", f"ear {i} is not a path of the graph: {exc}", (i,))
        if ear.x_attach not in on_path or ear.y_attach not in on_path:
            return VineVerdict(False, "attachment", f"ear {i} attachment off the base path", (i,))
        inside = [v for v in ear.interior if v in on_path]
        if inside:
            return VineVerdict(
                False, "interior", f"ear {i} interior vertex {inside[0]} lies on the base path", (i,)
            )
        if ear.length == 1 and abs(pos[ear.x_attach] - pos[ear.y_attach]) == 1:
            return VineVerdict(
                False, "base-edge", f"ear {i} is an edge of the base path itself", (i,)
            )
    used: dict[int, int] = {}
    for i, ear in enumerate(vine.ears, start=1):
        for v in ear.interior:
            if v in used:
                return VineVerdict(
                    False,
                    "overlap",
                    f"ears {used[v]} and {i} share interior vertex {v}",
                    (used[v], i),
                )
            used[v] = i
    broken = _chain_failure(pos, vine.ears, len(p.vertices) - 1)
    if broken is not None:
        return VineVerdict(False, "chain", broken)
    return VineVerdict(True)


def _iter_vines(
    p: Path,
    ears: list[Ear],
    state_cap: int,
) -> Iterator[Vine]:
    """Yield vines breadth-first: by ear count, then lexicographically by
    ear index in the enumerate_ears order."""
    pos = _position_map(p)
    last_pos = len(p.vertices) - 1
    xs = [pos[e.x_attach] for e in ears]
    ys = [pos[e.y_attach] for e in ears]
    interiors = [frozenset(e.interior) for e in ears]
    # state: (ear index tuple, union of interiors, y position of previous ear, y position of last ear)
    level: list[tuple[tuple[int, ...], frozenset[int], int, int]] = []
    states = 0
    for i in range(len(ears)):
        if xs[i] == 0:
            level.append(((i,), interiors[i], -1, ys[i]))
            states += 1
            if states > state_cap:
                raise VineSearchCapError(state_cap)
    while level:
        nxt: list[tuple[tuple[int, ...], frozenset[int], int, int]] = []
        for chain, used, y_prev, y_last in level:
            if y_last == last_pos:
                yield Vine(p, tuple(ears[i] for i in chain))
                continue  # complete states cannot extend (next y would need to pass the end)
            lo = 1 if len(chain) == 1 else y_prev
            start = bisect_left(xs, lo)
            for j in range(start, len(ears)):
                if xs[j] >= y_last:
                    break
                if ys[j] <= y_last:
                    continue
                if interiors[j] and not used.isdisjoint(interiors[j]):
                    continue
                nxt.append((chain + (j,), used | interiors[j], y_last, ys[j]))
                states += 1
                if states > state_cap:
                    raise VineSearchCapError(state_cap)
        level = nxt


def find_min_vine(
    g: Graph,
    p: Path,
    ear_cap: int = DEFAULT_EAR_CAP,
    state_cap: int = DEFAULT_STATE_CAP,
) -> Vine:
    """A vine with the minimum possible number of ears; deterministic
    (breadth-first, so the lexicographically first minimum-size vine)."""
    require_two_connected(g)
    validate_path(g, p.vertices)
    ears = enumerate_ears(g, p, cap=ear_cap)
    for vine in _iter_vines(p, ears, state_cap):
        return vine
    raise InternalInvariantError(
        "vine search exhausted without finding a vine; existence is guaranteed "
        "for any path in a 2-connected graph, so this is a bug"
    )


def enumerate_vines(
    g: Graph,
    p: Path,
    max_count: int,
    ear_cap: int = DEFAULT_EAR_CAP,
    state_cap: int = DEFAULT_STATE_CAP,
) -> VineEnumeration:
    """Up to max_count vines on p in deterministic (size, lexicographic)
    order, with a flag saying whether the enumeration was cut short."""
    if max_count < 1:
        raise PreconditionError("max_count must be positive")
    require_two_connected(g)
    validate_path(g, p.vertices)
    ears = enumerate_ears(g, p, cap=ear_cap)
    vines: list[Vine] = []
    truncated = False
    for vine in _iter_vines(p, ears, state_cap):
        if len(vines) == max_count:
            truncated = True
            break
        vines.append(vine)
    return VineEnumeration(tuple(vines), truncated)
