"""Segment decomposition of a vined path, the cycle constructions built
from it, and the sharp circumference bound they certify.

For a vine L_1..L_m (m >= 2) on a base path, the attachment points tile
the path into segments read left to right as

    A_1 B_1 A_2 B_2 ... B_{m-1} A_m

where B_i = x_{i+1}..y_i is the overlap of ear i's span with ear i+1's
span (at least one edge each), and A_i bridges between overlaps: A_1 =
x_1..x_2, A_m = y_{m-1}..y_m (at least one edge each), and A_i =
y_{i-1}..x_{i+1} for the middle indices (possibly empty). Writing a_i,
b_i for the segment lengths, three cycle families exist by construction:

    q0     = all ears plus all A segments,
    q_j    = ears/A segments for i in [j+1, m-j] plus B_j and B_{m-j},
    qstar  = B_{m/2} + B_{m/2-1} + A_{m/2} + ear m/2   (even m; B_0 is
             taken to be the empty segment, which covers m = 2).

Each is a simple cycle, so its length is at most the circumference c.
With slack y = c - m - 2 (non-negative because q0 shows c >= m + 2) the
cycle lengths force the segment inequalities

    (1)  a_1 + a_m     <= y + 2      - sum(a_i, 2 <= i <= m-1)
    (2)  b_j + b_{m-j} <= y + 2(j+1) - sum(a_i, j+1 <= i <= m-j)

and summing them yields the sharp bound on the circumference:

    c >= sqrt(4l + (y+1)^2)       for odd m,
    c >= sqrt(4l + (y+1)^2 - 1)   for even m,

which implies the classical Dirac bounds c > sqrt(2l) and c >= 2*sqrt(l).
All verdicts are computed in exact integer arithmetic; the real-valued
bound is only ever used for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CycleValidationError,
    InternalInvariantError,
    PreconditionError,
)
from .graphs import Graph, Path, Cycle, require_two_connected, validate_cycle
from .solvers import SolveLimits, DEFAULT_LIMITS, all_longest_paths, longest_cycle, longest_path
from .vines import (
    Vine,
    _chain_failure,
    _position_map,
    enumerate_vines,
    find_min_vine,
    verify_vine,
)


@dataclass(frozen=True)
class SegmentDecomposition:
    """Segment lengths and spans induced by a vine with m >= 2 ears.

    Spans are (start, end) position pairs on the base path, inclusive;
    a[i] and b[i] are 0-based views of the 1-based a_{i+1}, b_{i+1}.
    """

    vine: Vine
    a: tuple[int, ...]
    b: tuple[int, ...]
    a_spans: tuple[tuple[int, int], ...]
    b_spans: tuple[tuple[int, int], ...]

    @property
    def base(self) -> Path:
        return self.vine.base

    @property
    def m(self) -> int:
        return self.vine.m

    def a_vertices(self, i: int) -> tuple[int, ...]:
        """Vertex run of the 1-based segment A_i."""
        s, e = self.a_spans[i - 1]
        return self.base.vertices[s : e + 1]

    def b_vertices(self, i: int) -> tuple[int, ...]:
        """Vertex run of the 1-based segment B_i."""
        s, e = self.b_spans[i - 1]
        return self.base.vertices[s : e + 1]


def decompose(vine: Vine) -> SegmentDecomposition:
    """Cut the base path into the A/B segments induced by the vine.

    Requires m >= 2; single-ear vines take the dedicated pathway in
    analyze (the whole base path plus the ear is already a cycle).
    """
    m = vine.m
    if m < 2:
        raise PreconditionError(
            "segment decomposition needs a vine with at least two ears; "
            "single-ear vines are handled by the dedicated m=1 pathway"
        )
    p = vine.base
    pos = _position_map(p)
    for ear in vine.ears:
        if ear.x_attach not in pos or ear.y_attach not in pos:
            raise PreconditionError("vine attachment off the base path")
    broken = _chain_failure(pos, vine.ears, len(p.vertices) - 1)
    if broken is not None:
        raise PreconditionError(f"vine does not satisfy the interleaving chain: {broken}")
    xs = [pos[e.x_attach] for e in vine.ears]
    ys = [pos[e.y_attach] for e in vine.ears]
    a_spans = [(xs[0], xs[1])]
    a_spans += [(ys[i - 1], xs[i + 1]) for i in range(1, m - 1)]
    a_spans += [(ys[m - 2], ys[m - 1])]
    b_spans = [(xs[i + 1], ys[i]) for i in range(m - 1)]
    a = tuple(e - s for s, e in a_spans)
    b = tuple(e - s for s, e in b_spans)
    if sum(a) + sum(b) != p.length:
        raise InternalInvariantError(
            f"segment tiling broken: sum(a)={sum(a)} sum(b)={sum(b)} path length={p.length}"
        )
    if a[0] < 1 or a[-1] < 1 or any(x < 0 for x in a) or any(x < 1 for x in b):
        raise InternalInvariantError(f"segment length bounds violated: a={a} b={b}")
    return SegmentDecomposition(vine, a, b, tuple(a_spans), tuple(b_spans))


def _stitch_cycle(pieces) -> list[int]:
    """Join edge-disjoint path pieces whose endpoints pair up (each junction
    touches exactly two piece ends) into one closed walk."""
    live = [tuple(piece) for piece in pieces if len(piece) >= 2]
    if len(live) < 2:
        raise InternalInvariantError("cycle assembly needs at least two non-empty pieces")
    ends: dict[int, list[int]] = {}
    for i, piece in enumerate(live):
        ends.setdefault(piece[0], []).append(i)
        ends.setdefault(piece[-1], []).append(i)
    for v, touching in ends.items():
        if len(touching) != 2:
            raise InternalInvariantError(
                f"cycle assembly: junction {v} touches {len(touching)} piece ends, expected 2"
            )
    used = [False] * len(live)
    walk = list(live[0])
    used[0] = True
    start = walk[0]
    for _ in range(len(live) - 1):
        cur = walk[-1]
        candidates = [i for i in ends[cur] if not used[i]]
        if len(candidates) != 1:
            raise InternalInvariantError(f"cycle assembly stuck at junction {cur}")
        i = candidates[0]
        piece = live[i]
        if piece[0] == cur:
            walk.extend(piece[1:])
        else:
            walk.extend(piece[-2::-1])
        used[i] = True
    if walk[-1] != start:
        raise InternalInvariantError("cycle assembly did not close")
    return walk[:-1]


def _certify(g: Graph, vertices, expected_len: int, label: str) -> Cycle:
    try:
        cycle = validate_cycle(g, vertices)
    except CycleValidationError as exc:
        raise InternalInvariantError(f"{label} is not a simple cycle: {exc}") from exc
    if cycle.length != expected_len:
        raise InternalInvariantError(
            f"{label} length {cycle.length} does not match the formula value {expected_len}"
        )
    return cycle


def build_q0(g: Graph, d: SegmentDecomposition) -> Cycle:
    """Cycle through every ear and every A segment; length sum(ears) + sum(a)."""
    pieces = [d.a_vertices(i) for i in range(1, d.m + 1)]
    pieces += [ear.vertices for ear in d.vine.ears]
    expected = sum(ear.length for ear in d.vine.ears) + sum(d.a)
    return _certify(g, _stitch_cycle(pieces), expected, "q0 cycle")


def build_qj(g: Graph, d: SegmentDecomposition, j: int) -> Cycle:
    """Cycle through ears j+1..m-j with their A segments plus B_j and B_{m-j}."""
    m = d.m
    if not 1 <= j <= (m - 1) // 2:
        raise PreconditionError(f"j must lie in [1, {(m - 1) // 2}] for m={m}, got {j}")
    pieces = [d.a_vertices(i) for i in range(j + 1, m - j + 1)]
    pieces += [d.vine.ears[i - 1].vertices for i in range(j + 1, m - j + 1)]
    pieces += [d.b_vertices(j), d.b_vertices(m - j)]
    expected = (
        sum(d.vine.ears[i - 1].length + d.a[i - 1] for i in range(j + 1, m - j + 1))
        + d.b[j - 1]
        + d.b[m - j - 1]
    )
    return _certify(g, _stitch_cycle(pieces), expected, f"q{j} cycle")


def build_qstar(g: Graph, d: SegmentDecomposition) -> Cycle:
    """Even-m cycle B_{m/2} + B_{m/2-1} + A_{m/2} + ear m/2, reading B_0 as
    the empty segment so that m = 2 reduces to A_1 + B_1 + ear 1."""
    m = d.m
    if m % 2 != 0:
        raise PreconditionError(f"qstar needs an even ear count, got m={m}")
    h = m // 2
    pieces = [d.b_vertices(h), d.a_vertices(h), d.vine.ears[h - 1].vertices]
    expected = d.b[h - 1] + d.a[h - 1] + d.vine.ears[h - 1].length
    if h >= 2:
        pieces.append(d.b_vertices(h - 1))
        expected += d.b[h - 2]
    return _certify(g, _stitch_cycle(pieces), expected, "qstar cycle")


@dataclass(frozen=True)
class Inequality1Verdict:
    """a_1 + a_m <= slack + 2 - sum of the middle a_i."""

    lhs: int
    rhs: int
    ok: bool


@dataclass(frozen=True)
class Inequality2Verdict:
    """b_j + b_{m-j} <= slack + 2(j+1) - sum(a_i, j+1 <= i <= m-j); the
    weak form drops the a-sum from the right side."""

    j: int
    lhs: int
    rhs: int
    weak_rhs: int
    ok: bool
    weak_ok: bool


def check_inequality_1(d: SegmentDecomposition, c: int) -> Inequality1Verdict:
    """End-segment inequality against the certified circumference c."""
    slack = c - d.m - 2
    if slack < 0:
        raise InternalInvariantError(
            f"negative slack {slack}: circumference {c} below m+2={d.m + 2}"
        )
    lhs = d.a[0] + d.a[-1]
    rhs = slack + 2 - sum(d.a[1:-1])
    return Inequality1Verdict(lhs, rhs, lhs <= rhs)


def check_inequality_2(d: SegmentDecomposition, c: int, j: int) -> Inequality2Verdict:
    """Overlap-segment inequality for one j against the circumference c."""
    m = d.m
    if not 1 <= j <= (m - 1) // 2:
        raise PreconditionError(f"j must lie in [1, {(m - 1) // 2}] for m={m}, got {j}")
    slack = c - m - 2
    if slack < 0:
        raise InternalInvariantError(
            f"negative slack {slack}: circumference {c} below m+2={m + 2}"
        )
    lhs = d.b[j - 1] + d.b[m - j - 1]
    middle = sum(d.a[j : m - j])
    weak_rhs = slack + 2 * (j + 1)
    rhs = weak_rhs - middle
    return Inequality2Verdict(j, lhs, rhs, weak_rhs, lhs <= rhs, lhs <= weak_rhs)


def circumference_bound_squared(l: int, slack: int, m: int) -> int:
    """Exact integer square of the circumference bound for the given parity."""
    if l < 1:
        raise PreconditionError(f"path length must be at least 1, got {l}")
    if slack < 0:
        raise PreconditionError(f"slack must be non-negative, got {slack}")
    if m < 1:
        raise PreconditionError(f"ear count must be at least 1, got {m}")
    value = 4 * l + (slack + 1) ** 2
    if m % 2 == 0:
        value -= 1
    return value


def circumference_bound(l: int, slack: int, m: int) -> float:
    """sqrt(4l + (slack+1)^2) for odd m, sqrt(4l + (slack+1)^2 - 1) for even m."""
    return math.sqrt(circumference_bound_squared(l, slack, m))


@dataclass(frozen=True)
class DiracVerdict:
    """Classical corollaries, checked as c^2 > 2l and c^2 >= 4l exactly."""

    theorem_a: bool
    conjecture_a: bool


def dirac_check(l: int, c: int) -> DiracVerdict:
    """c > sqrt(2l) and c >= 2*sqrt(l), in exact integer arithmetic."""
    if l < 1 or c < 3:
        raise PreconditionError(f"need l >= 1 and c >= 3, got l={l} c={c}")
    return DiracVerdict(theorem_a=c * c > 2 * l, conjecture_a=c * c >= 4 * l)


@dataclass(frozen=True)
class VineVerification:
    """Everything one vine certifies against fixed l and c."""

    m: int
    slack: int
    bound: float
    bound_met: bool
    tight: bool
    ineq1: Inequality1Verdict | None
    ineq2: tuple[Inequality2Verdict, ...]
    q0_len: int
    qj_lens: tuple[int, ...]
    qstar_len: int | None
    violations: tuple[str, ...]


def verify_vine_against(g: Graph, p: Path, l: int, c: int, vine: Vine) -> VineVerification:
    """Run every theorem check one vine supports: slack sign, the exact
    bound, the segment inequalities, and the three cycle constructions."""
    violations: list[str] = []
    m = vine.m
    slack = c - m - 2
    if slack < 0:
        # c >= m + 2 fails: everything downstream is meaningless
        return VineVerification(
            m, slack, float("nan"), False, False, None, (), 0, (), None,
            (f"c >= m+2 violated: c={c} m={m}",),
        )
    bound_sq = circumference_bound_squared(l, slack, m)
    bound = math.sqrt(bound_sq)
    bound_met = c * c >= bound_sq
    tight = c * c == bound_sq
    if not bound_met:
        violations.append(f"bound violated: c^2={c * c} < {bound_sq} (l={l} slack={slack} m={m})")
    if m == 1:
        ear = vine.ears[0]
        ring = tuple(p.vertices) + tuple(reversed(ear.interior))
        q0 = _certify(g, ring, p.length + ear.length, "base-plus-ear cycle")
        q0_len = q0.length
        if q0_len > c:
            violations.append(f"base-plus-ear cycle longer than the circumference: {q0_len} > {c}")
        if c < l + 1:
            violations.append(f"c >= l+1 violated for a single-ear vine: c={c} l={l}")
        return VineVerification(
            m, slack, bound, bound_met, tight, None, (), q0_len, (), None, tuple(violations)
        )
    d = decompose(vine)
    ineq1 = check_inequality_1(d, c)
    if not ineq1.ok:
        violations.append(f"inequality (1) violated: {ineq1.lhs} > {ineq1.rhs}")
    ineq2 = tuple(check_inequality_2(d, c, j) for j in range(1, (m - 1) // 2 + 1))
    for verdict in ineq2:
        if not verdict.ok:
            violations.append(
                f"inequality (2) violated at j={verdict.j}: {verdict.lhs} > {verdict.rhs}"
            )
    q0 = build_q0(g, d)
    if q0.length > c:
        violations.append(f"q0 cycle longer than the circumference: {q0.length} > {c}")
    qj_lens = []
    for j in range(1, (m - 1) // 2 + 1):
        qj = build_qj(g, d, j)
        qj_lens.append(qj.length)
        if qj.length > c:
            violations.append(f"q{j} cycle longer than the circumference: {qj.length} > {c}")
    qstar_len: int | None = None
    if m % 2 == 0:
        qstar = build_qstar(g, d)
        qstar_len = qstar.length
        if qstar.length > c:
            violations.append(f"qstar cycle longer than the circumference: {qstar.length} > {c}")
        h = m // 2
        overlap_sum = d.b[h - 1] + (d.b[h - 2] if h >= 2 else 0)
        if overlap_sum > slack + m + 1:
            violations.append(
                f"qstar consequence violated: b_{h}+b_{h - 1}={overlap_sum} > slack+m+1={slack + m + 1}"
            )
    return VineVerification(
        m, slack, bound, bound_met, tight, ineq1, ineq2,
        q0.length, tuple(qj_lens), qstar_len, tuple(violations),
    )


@dataclass(frozen=True)
class BoundReport:
    """Per-instance verdict bundle for one graph."""

    n: int
    edge_count: int
    l: int
    c: int
    m: int
    slack: int
    parity: str
    bound: float
    bound_met: bool
    tight: bool
    ineq1: Inequality1Verdict | None
    ineq2: tuple[Inequality2Verdict, ...]
    q0_len: int
    qj_lens: tuple[int, ...]
    qstar_len: int | None
    dirac: DiracVerdict
    path: Path
    cycle: Cycle
    vine: Vine
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def analyze(g: Graph, limits: SolveLimits = DEFAULT_LIMITS) -> BoundReport:
    """Full pipeline: solve for l and c exactly, take the minimum-ear vine
    on the canonical longest path, and check everything it certifies."""
    require_two_connected(g)
    path = longest_path(g, limits)
    cycle = longest_cycle(g, limits)
    l, c = path.length, cycle.length
    vine = find_min_vine(g, path)
    verdict = verify_vine_against(g, path, l, c, vine)
    if verdict.slack < 0:
        raise InternalInvariantError(
            f"minimum vine has negative slack: c={c} m={vine.m}; contradicts c >= m+2"
        )
    violations = list(verdict.violations)
    dirac = dirac_check(l, c)
    if not dirac.theorem_a:
        violations.append(f"Dirac bound violated: c^2={c * c} <= 2l={2 * l}")
    if not dirac.conjecture_a:
        violations.append(f"sharp Dirac bound violated: c^2={c * c} < 4l={4 * l}")
    if verdict.bound_met and not dirac.conjecture_a:
        violations.append("implication broken: main bound holds but c^2 < 4l")
    if dirac.conjecture_a and not dirac.theorem_a:
        violations.append("implication broken: c^2 >= 4l but c^2 <= 2l")
    return BoundReport(
        n=g.n,
        edge_count=g.edge_count,
        l=l,
        c=c,
        m=vine.m,
        slack=verdict.slack,
        parity="odd" if vine.m % 2 else "even",
        bound=verdict.bound,
        bound_met=verdict.bound_met,
        tight=verdict.tight,
        ineq1=verdict.ineq1,
        ineq2=verdict.ineq2,
        q0_len=verdict.q0_len,
        qj_lens=verdict.qj_lens,
        qstar_len=verdict.qstar_len,
        dirac=dirac,
        path=path,
        cycle=cycle,
        vine=vine,
        violations=tuple(violations),
    )


def verify_all_vines(
    g: Graph, p: Path, l: int, c: int, max_vines: int
) -> tuple[int, bool, list[str]]:
    """Run verify_vine_against over every enumerated vine on p (up to
    max_vines); returns (vines checked, truncated?, violations)."""
    enumeration = enumerate_vines(g, p, max_count=max_vines)
    violations: list[str] = []
    for idx, vine in enumerate(enumeration.vines):
        verdict = verify_vine_against(g, p, l, c, vine)
        inner = verify_vine(g, vine)
        if not inner.ok:
            violations.append(f"vine #{idx} fails its own validity check: {inner.detail}")
        for v in verdict.violations:
            violations.append(f"vine #{idx} (m={vine.m}): {v}")
    return len(enumeration.vines), enumeration.truncated, violations


def verify_all_longest_paths(
    g: Graph, l: int, c: int, max_vertices: int = 10
) -> tuple[int, list[str]]:
    """Re-run the minimum-vine checks on every longest path (small graphs
    only); returns (paths checked, violations)."""
    violations: list[str] = []
    paths = all_longest_paths(g, max_vertices=max_vertices)
    for idx, p in enumerate(paths):
        if p.length != l:
            violations.append(f"path #{idx} has length {p.length}, expected {l}")
            continue
        vine = find_min_vine(g, p)
        verdict = verify_vine_against(g, p, l, c, vine)
        for v in verdict.violations:
            violations.append(f"longest path #{idx}: {v}")
    return len(paths), violations
