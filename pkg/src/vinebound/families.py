"""Tight instance families and seeded random 2-connected graphs.

The extremal construction realizes the circumference bound with equality:
a Hamiltonian spine whose chord attachments induce the segment lengths

    a_1 = a_m = slack/2 + 1,   middle a_i = 0,
    b_i = slack/2 + min(i, m-i) + 1,

so that c = m + slack + 2 and c^2 equals 4l + (slack+1)^2 (odd m) or
4l + (slack+1)^2 - 1 (even m) exactly. The slack must be even because
the construction halves it; odd slack is rejected rather than rounded.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import analyze, verify_all_vines
from .errors import PreconditionError, InternalInvariantError, VineboundError
from .graphs import Graph, Path, is_two_connected, serialize_graph, validate_path
from .solvers import SolveLimits, longest_cycle_oracle, longest_path_oracle
from .vines import Ear, Vine, verify_vine

ORACLE_CROSS_CHECK_MAX_N = 12


@dataclass(frozen=True)
class ExtremalSpec:
    """Parameters of one tight instance: ear count m >= 2, even slack >= 0."""

    m: int
    slack: int = 0

    def __post_init__(self):
        if self.m < 2:
            raise PreconditionError(f"extremal construction needs m >= 2, got {self.m}")
        if self.slack < 0 or self.slack % 2 != 0:
            raise PreconditionError(
                f"slack must be even and non-negative, got {self.slack}; "
                "the construction halves it and has no odd-slack variant"
            )


def extremal_segment_lengths(spec: ExtremalSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The (a, b) segment lengths the construction is built from."""
    h = spec.slack // 2
    m = spec.m
    a = (h + 1,) + (0,) * (m - 2) + (h + 1,)
    b = tuple(h + min(i, m - i) + 1 for i in range(1, m))
    return a, b


def extremal_path_length(spec: ExtremalSpec) -> int:
    """Closed form for the spine length l of the construction."""
    m, y = spec.m, spec.slack
    if m % 2 == 1:
        return (y + 2) * (m + 1) // 2 + (m - 1) * (m + 1) // 4
    return ((m + 2) ** 2 + 2 * y * (m + 1)) // 4


def extremal_cycle_length(spec: ExtremalSpec) -> int:
    """The circumference the construction attains: m + slack + 2."""
    return spec.m + spec.slack + 2


def extremal_graph(spec: ExtremalSpec) -> tuple[Graph, Path, Vine]:
    """Build the tight instance: spine path plus one chord per ear.

    Returns the graph, the spine (a Hamiltonian, hence longest, path) and
    the vine of chords that witnesses the bound with equality.
    """
    a, b = extremal_segment_lengths(spec)
    m = spec.m
    # positions of the attachment points, reading the tiling a1 b1 a2 ... b_{m-1} am
    segments: list[int] = []
    for i in range(m - 1):
        segments.append(a[i])
        segments.append(b[i])
    segments.append(a[m - 1])
    points = [0]
    for length in segments:
        points.append(points[-1] + length)
    xs = [points[0]] + [points[2 * k - 1] for k in range(1, m)]
    ys = [points[2 * k] for k in range(1, m)] + [points[2 * m - 1]]
    n = points[-1] + 1
    edges = {(v, v + 1) for v in range(n - 1)}
    edges |= {(xs[k], ys[k]) for k in range(m)}
    g = Graph(n, edges)
    spine = validate_path(g, list(range(n)))
    vine = Vine(spine, tuple(Ear((xs[k], ys[k])) for k in range(m)))
    verdict = verify_vine(g, vine)
    if not verdict.ok:
        raise InternalInvariantError(f"extremal construction produced an invalid vine: {verdict.detail}")
    return g, spine, vine


def random_two_connected(n: int, extra_ears: int, seed: int) -> tuple[Graph, int]:
    """Seed-deterministic 2-connected graph: a Hamiltonian cycle on a
    shuffled vertex order plus extra chords sampled without replacement
    from the remaining pairs.

    Returns the graph and the number of chords actually placed, which is
    smaller than requested only when the graph saturates.
    """
    if n < 3:
        raise PreconditionError(f"2-connected graphs need n >= 3, got {n}")
    if extra_ears < 0:
        raise PreconditionError(f"extra_ears must be non-negative, got {extra_ears}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        edges.add((min(u, v), max(u, v)))
    candidates = sorted(
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    )
    placed = min(extra_ears, len(candidates))
    edges.update(rng.sample(candidates, placed))
    g = Graph(n, edges)
    if not is_two_connected(g):
        raise InternalInvariantError("cycle-plus-chords generator produced a non-2-connected graph")
    return g, placed


@dataclass(frozen=True)
class FuzzConfig:
    """Seeded campaign over random 2-connected instances."""

    count: int
    n_min: int
    n_max: int
    seed: int
    extra_min: int = 0
    extra_max: int = 10
    vine_cap: int = 200
    jobs: int = 1
    limits: SolveLimits = field(default_factory=SolveLimits)

    def __post_init__(self):
        if self.count < 1:
            raise PreconditionError(f"count must be at least 1, got {self.count}")
        if not 3 <= self.n_min <= self.n_max:
            raise PreconditionError(
                f"need 3 <= n_min <= n_max, got n_min={self.n_min} n_max={self.n_max}"
            )
        if not 0 <= self.extra_min <= self.extra_max:
            raise PreconditionError(
                f"need 0 <= extra_min <= extra_max, got {self.extra_min}, {self.extra_max}"
            )
        if self.vine_cap < 1:
            raise PreconditionError(f"vine_cap must be at least 1, got {self.vine_cap}")
        if self.jobs < 1:
            raise PreconditionError(f"jobs must be at least 1, got {self.jobs}")


@dataclass(frozen=True)
class InstanceRecord:
    """Outcome of one fuzz instance; graph_text is set only on violation."""

    index: int
    seed: int
    n: int
    extra_requested: int
    extra_placed: int
    l: int
    c: int
    m: int
    slack: int
    parity: str
    bound: float
    tight: bool
    oracle_checked: bool
    vines_checked: int
    vines_truncated: bool
    violations: tuple[str, ...]
    graph_text: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class FuzzReport:
    """Campaign outcome; records are in instance-index order."""

    config: FuzzConfig
    records: tuple[InstanceRecord, ...]
    elapsed: float

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.ok)

    @property
    def failed(self) -> int:
        return len(self.records) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _run_fuzz_instance(task: tuple[int, int, int, int, int, SolveLimits]) -> InstanceRecord:
    index, seed, n, extra, vine_cap, limits = task
    g, placed = random_two_connected(n, extra, seed)
    try:
        report = analyze(g, limits)
        violations = list(report.violations)
        checked, truncated, more = verify_all_vines(g, report.path, report.l, report.c, vine_cap)
        violations.extend(more)
        oracle_checked = g.n <= ORACLE_CROSS_CHECK_MAX_N
        if oracle_checked:
            oracle_l = longest_path_oracle(g)
            oracle_c = longest_cycle_oracle(g)
            if oracle_l != report.l:
                violations.append(f"oracle disagrees on l: search {report.l}, oracle {oracle_l}")
            if oracle_c != report.c:
                violations.append(f"oracle disagrees on c: search {report.c}, oracle {oracle_c}")
        return InstanceRecord(
            index=index,
            seed=seed,
            n=n,
            extra_requested=extra,
            extra_placed=placed,
            l=report.l,
            c=report.c,
            m=report.m,
            slack=report.slack,
            parity=report.parity,
            bound=report.bound,
            tight=report.tight,
            oracle_checked=oracle_checked,
            vines_checked=checked,
            vines_truncated=truncated,
            violations=tuple(violations),
            graph_text=serialize_graph(g) if violations else None,
        )
    except VineboundError as exc:
        return InstanceRecord(
            index=index,
            seed=seed,
            n=n,
            extra_requested=extra,
            extra_placed=placed,
            l=0,
            c=0,
            m=0,
            slack=0,
            parity="odd",
            bound=0.0,
            tight=False,
            oracle_checked=False,
            vines_checked=0,
            vines_truncated=False,
            violations=(f"exception during verification: {type(exc).__name__}: {exc}",),
            graph_text=serialize_graph(g),
        )


def fuzz_campaign(cfg: FuzzConfig) -> FuzzReport:
    """Generate, analyze, and fully verify cfg.count seeded instances.

    A theorem violation never aborts the campaign; it is recorded on the
    instance together with a replayable graph file. Records are ordered by
    instance index regardless of the number of worker processes.
    """
    master = random.Random(cfg.seed)
    tasks = []
    for index in range(cfg.count):
        n = master.randint(cfg.n_min, cfg.n_max)
        extra = master.randint(cfg.extra_min, cfg.extra_max)
        seed = master.getrandbits(63)
        tasks.append((index, seed, n, extra, cfg.vine_cap, cfg.limits))
    start = time.monotonic()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = tuple(pool.map(_run_fuzz_instance, tasks, chunksize=8))
    else:
        records = tuple(_run_fuzz_instance(task) for task in tasks)
    return FuzzReport(cfg, records, time.monotonic() - start)
