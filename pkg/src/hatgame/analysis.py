"""Exact polynomial analysis of optimal hat-game strategies.

A signature (c_0, ..., c_N) fixes a loss polynomial
sum_j c_j p^j (1-p)^(N-j); comparing two signature classes on an interval
is an exact sign question about their difference polynomial.  This module
classifies those comparisons (dominance), assembles the dominance graph of
the five-player loss classes, isolates the quadratic-irrational threshold
where the optimal class changes, builds the closed-form piecewise maximum
win probability psi(n, p) for n <= 5, and cross-checks the minimum loss-set
sizes against the known minimum sizes of radius-1 binary covering codes.

All of it is exact: rational arithmetic throughout, with the breakpoints
sqrt(2) - 1 and 2 - sqrt(2) represented as elements of Q(sqrt 2), never as
floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .adequate import (
    Signature,
    adequate_sets_cached,
    min_cover_optimize,
    min_cover_size,
    signature,
)
from .core import GameParams, ResourceLimitError
from .polys import (
    Number,
    Poly,
    SQRT2_MINUS_1,
    Sqrt2Num,
    TWO_MINUS_SQRT2,
    number_sign,
)

#: Minimum sizes K(n, 1) of binary covering codes of radius 1 for word
#: lengths 2..9, from the published bound tables (the n = 9 value pins an
#: interval closed in 2001/2005).  For the symmetric game the optimal
#: strategy loses on exactly K(n, 1) configurations.
COVERING_CODE_SIZE = {2: 2, 3: 2, 4: 4, 5: 7, 6: 12, 7: 16, 8: 32, 9: 62}


def signature_poly(sig: Signature) -> Poly:
    """Loss polynomial sum_j c_j p^j (1-p)^(n-j), expanded exactly."""
    n = sig.n_players
    p = Poly.x()
    q = Poly((Fraction(1), Fraction(-1)))
    total = Poly(())
    for j, c in enumerate(sig.counts):
        if c:
            total = total + c * p**j * q ** (n - j)
    return total


# ---------------------------------------------------------------------------
# Dominance between signature classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DominanceResult:
    """Sign classification of poly(a) - poly(b) on an open interval.

    relation is one of "equal", "always_less", "always_greater" or
    "crossing"; for crossings, ``roots`` holds one isolating rational
    interval per distinct interior root (degenerate (r, r) for exact
    rational roots).
    """

    relation: str
    roots: tuple[tuple[Fraction, Fraction], ...] = ()


#: Isolating intervals returned by :func:`dominance` are refined below
#: this width.
ROOT_WIDTH = Fraction(1, 10**13)


def dominance(
    sig_a: Signature,
    sig_b: Signature,
    interval: tuple[Number, Number] = (Fraction(1, 2), Fraction(1)),
) -> DominanceResult:
    """Exact comparison of two loss classes on an open interval.

    "always_less" means class a is strictly cheaper (dominates) throughout
    the interval.  Interval endpoints may be rational or in Q(sqrt 2).
    """
    if sig_a.n_players != sig_b.n_players:
        raise ValueError("signatures must have equal player counts")
    lo, hi = interval
    diff = signature_poly(sig_a) - signature_poly(sig_b)
    if diff.is_zero:
        return DominanceResult("equal")
    if diff.count_roots_open(lo, hi) == 0:
        s = diff.sign_on_open_interval(lo, hi)
        return DominanceResult("always_less" if s < 0 else "always_greater")
    # interior roots: isolate on a rational cover of the interval, then
    # keep those strictly inside (lo, hi)
    lo_r = lo.a - 2 * abs(lo.b) if isinstance(lo, Sqrt2Num) else Fraction(lo)
    hi_r = hi.a + 2 * abs(hi.b) if isinstance(hi, Sqrt2Num) else Fraction(hi)
    lo_q = lo if isinstance(lo, Sqrt2Num) else Sqrt2Num(Fraction(lo))
    hi_q = hi if isinstance(hi, Sqrt2Num) else Sqrt2Num(Fraction(hi))
    roots = []
    for a, b in diff.isolate_roots_open(lo_r, hi_r):
        if a != b:
            a, b = diff.refine_root(a, b, ROOT_WIDTH)
        # decide exactly whether the bracketed root lies strictly inside
        # (lo, hi); brackets straddling an endpoint that is not itself a
        # root are refined until they separate from it
        while True:
            if a == b:
                if lo_q < Sqrt2Num(a) < hi_q:
                    roots.append((a, b))
                break
            if lo_q < Sqrt2Num(a) and Sqrt2Num(b) < hi_q:
                roots.append((a, b))
                break
            if Sqrt2Num(b) <= lo_q or hi_q <= Sqrt2Num(a):
                break
            straddled_root = False
            for endpoint in (lo_q, hi_q):
                if Sqrt2Num(a) <= endpoint <= Sqrt2Num(b) and number_sign(
                    diff(endpoint)
                ) == 0:
                    straddled_root = True  # the bracketed root IS the endpoint
            if straddled_root:
                break
            a, b = diff.refine_root(a, b, (b - a) / 4)
    assert len(roots) == diff.count_roots_open(lo, hi)
    if not roots:
        s = diff.sign_on_open_interval(lo, hi)
        return DominanceResult("always_less" if s < 0 else "always_greater")
    return DominanceResult("crossing", tuple(roots))


@dataclass(frozen=True)
class DominanceGraph:
    """Dominance relations among the loss classes of minimum-size sets.

    nodes are ordered by their probability at p = 9/10; edges (i, j) mean
    node i is strictly cheaper than node j on the whole interval; crossing
    pairs swap order inside the interval.
    """

    n_players: int
    interval: tuple[Number, Number]
    nodes: tuple[Signature, ...]
    edges: tuple[tuple[int, int], ...]
    crossings: tuple[tuple[int, int, tuple[tuple[Fraction, Fraction], ...]], ...]

    def node_labels(self) -> tuple[str, ...]:
        return tuple(s.compact() for s in self.nodes)

    def undominated(self) -> tuple[int, ...]:
        """Nodes no other class beats on the whole interval: the candidate
        optimal classes."""
        beaten = {j for _i, j in self.edges}
        return tuple(k for k in range(len(self.nodes)) if k not in beaten)

    def flagged_crossings(
        self,
    ) -> tuple[tuple[int, int, tuple[tuple[Fraction, Fraction], ...]], ...]:
        """Crossings between undominated classes: the order swaps that
        actually move the optimum.  Crossings between already-dominated
        classes exist too but never matter."""
        live = set(self.undominated())
        return tuple(
            (i, j, roots) for i, j, roots in self.crossings if i in live and j in live
        )

    def to_dot(self) -> str:
        lines = ["digraph dominance {"]
        for s in self.nodes:
            lines.append('  "%s";' % s.compact())
        for i, j in self.edges:
            lines.append(
                '  "%s" -> "%s";' % (self.nodes[i].compact(), self.nodes[j].compact())
            )
        for i, j, _roots in self.flagged_crossings():
            lines.append(
                '  "%s" -> "%s" [dir=none, style=dashed, label="crossing"];'
                % (self.nodes[i].compact(), self.nodes[j].compact())
            )
        lines.append("}")
        return "\n".join(lines)


def signature_classes(n: int) -> tuple[Signature, ...]:
    """Distinct signatures of the minimum-size adequate sets, ordered by
    probability at p = 9/10 (ascending), ties by compact string."""
    size = min_cover_size(n)
    params = GameParams(n, Fraction(9, 10))
    distinct = {signature(aset) for aset in adequate_sets_cached(n, size)}
    return tuple(
        sorted(distinct, key=lambda s: (s.probability(params), s.compact()))
    )


def dominance_graph(
    n: int = 5,
    interval: tuple[Number, Number] = (Fraction(1, 2), Fraction(1)),
) -> DominanceGraph:
    """Pairwise dominance among all minimum-size loss classes."""
    nodes = signature_classes(n)
    edges = []
    crossings = []
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            result = dominance(nodes[i], nodes[j], interval)
            if result.relation == "always_less":
                edges.append((i, j))
            elif result.relation == "always_greater":
                edges.append((j, i))
            elif result.relation == "crossing":
                crossings.append((i, j, result.roots))
    return DominanceGraph(n, interval, nodes, tuple(edges), tuple(crossings))


# ---------------------------------------------------------------------------
# The maximum win probability psi(n, p)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiecewisePsi:
    """Piecewise-polynomial maximum win probability on (0, 1).

    breakpoints has one more entry than pieces; piece k applies on the
    closed interval [breakpoints[k], breakpoints[k+1]] (adjacent pieces
    agree at shared breakpoints - the curve is continuous).
    """

    n_players: int
    breakpoints: tuple[Sqrt2Num, ...]
    pieces: tuple[Poly, ...]

    def piece_index(self, p: Number) -> int:
        """Index of the piece whose closed interval contains p (the
        leftmost one at interior breakpoints)."""
        x = p if isinstance(p, Sqrt2Num) else Sqrt2Num(Fraction(p))
        if not self.breakpoints[0] < x < self.breakpoints[-1]:
            raise ValueError("p must lie strictly between 0 and 1")
        for k in range(len(self.pieces)):
            if x <= self.breakpoints[k + 1]:
                return k
        raise AssertionError("unreachable")

    def __call__(self, p: Number):
        return self.pieces[self.piece_index(p)](p)

    def interior_breakpoints(self) -> tuple[Sqrt2Num, ...]:
        return self.breakpoints[1:-1]


@lru_cache(maxsize=8)
def psi_closed_form(n: int) -> PiecewisePsi:
    """Exact closed form of the maximum win probability for n in 2..5.

    n=2: max(p, q).  n=3 and n=4: 1 - pq.  n=5: four pieces that meet at
    sqrt(2)-1, 1/2 and 2-sqrt(2); the optimal loss class switches between
    the (0,2,2,2,1,0) and (0,2,4,0,0,1) families at the outer breakpoints.
    """
    zero = Sqrt2Num(Fraction(0))
    one = Sqrt2Num(Fraction(1))
    half = Sqrt2Num(Fraction(1, 2))
    if n == 2:
        return PiecewisePsi(
            2,
            (zero, half, one),
            (Poly.from_coeffs([1, -1]), Poly.from_coeffs([0, 1])),
        )
    if n in (3, 4):
        return PiecewisePsi(n, (zero, one), (Poly.from_coeffs([1, -1, 1]),))
    if n == 5:
        return PiecewisePsi(
            5,
            (zero, SQRT2_MINUS_1, half, TWO_MINUS_SQRT2, one),
            (
                Poly.from_coeffs([1, -1, 2, -2, 0, 1]),
                Poly.from_coeffs([0, 5, -10, 6, 1, -1]),
                Poly.from_coeffs([1, -2, 4, 0, -4, 1]),
                Poly.from_coeffs([1, -2, 6, -8, 5, -1]),
            ),
        )
    raise ValueError("closed forms are available for n in {2, 3, 4, 5}")


def psi_solver(n: int, params: GameParams, node_budget: int | None = 20_000_000) -> Fraction:
    """Maximum win probability computed from first principles:
    1 - (minimum probability over all adequate sets).

    Exact and fast for n <= 5; n = 6 is attempted best-effort under a node
    budget; larger n is refused.
    """
    if n > 6:
        raise ResourceLimitError("psi_solver supports n <= 6 (best effort at 6)")
    _, value = min_cover_optimize(n, params, node_budget=node_budget)
    return 1 - value


@dataclass(frozen=True)
class CurveRow:
    """One psi-curve sample: exact abscissa, exact value, piece label.

    Regular grid rows carry the 1-based piece index as their label;
    breakpoint rows (inserted when a breakpoint falls inside the range, or
    relabeled when it lands on a grid point) carry "k|k+1".
    """

    p: Number
    psi: Number
    piece: str
    is_breakpoint: bool = False


def psi_curve(
    n: int, p_min: Fraction, p_max: Fraction, steps: int
) -> list[CurveRow]:
    """Evaluate the closed form on an equally spaced rational grid,
    inserting rows for interior breakpoints that fall inside the range."""
    p_min, p_max = Fraction(p_min), Fraction(p_max)
    if not (0 < p_min < p_max < 1):
        raise ValueError("need 0 < p_min < p_max < 1")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    psi = psi_closed_form(n)
    rows: list[CurveRow] = []
    for k in range(steps + 1):
        p = p_min + (p_max - p_min) * k / steps
        rows.append(CurveRow(p, psi(p), str(psi.piece_index(p) + 1)))
    for bp in psi.interior_breakpoints():
        if Sqrt2Num(p_min) <= bp <= Sqrt2Num(p_max):
            k = psi.piece_index(bp)
            label = "%d|%d" % (k + 1, k + 2) if bp < Sqrt2Num(p_max) else str(k + 1)
            rows.append(CurveRow(bp, psi(bp), label, True))
    # merge: breakpoints replace coincident grid rows, otherwise interleave
    out: dict[object, CurveRow] = {}
    for row in rows:
        key = row.p if not isinstance(row.p, Sqrt2Num) or not row.p.is_rational else row.p.as_fraction()
        if key in out and not row.is_breakpoint:
            continue
        out[key] = row
    return sorted(
        out.values(),
        key=lambda r: r.p if isinstance(r.p, Sqrt2Num) else Sqrt2Num(Fraction(r.p)),
    )


# ---------------------------------------------------------------------------
# Optimal-set counting
# ---------------------------------------------------------------------------


def count_optimal_sets(n: int, p: Number) -> int:
    """How many minimum-size adequate sets attain the minimum probability
    at hat probability ``p``.

    ``p`` may be rational or a quadratic number (the interesting
    thresholds are sqrt(2)-1 and 2-sqrt(2), where two loss classes tie and
    the optimal families merge); comparison is exact either way.
    """
    x = p if isinstance(p, Sqrt2Num) else Sqrt2Num(Fraction(p))
    if not Sqrt2Num(Fraction(0)) < x < Sqrt2Num(Fraction(1)):
        raise ValueError("p must lie strictly between 0 and 1")
    size = min_cover_size(n)
    sets = adequate_sets_cached(n, size)
    sig_counts: dict[Signature, int] = {}
    for aset in sets:
        sig = signature(aset)
        sig_counts[sig] = sig_counts.get(sig, 0) + 1
    values = {sig: signature_poly(sig)(x) for sig in sig_counts}
    best = None
    for sig, value in values.items():
        if best is None or number_sign(value - best) < 0:
            best = value
    return sum(
        count
        for sig, count in sig_counts.items()
        if number_sign(values[sig] - best) == 0
    )


def optimal_signature_classes(n: int, p: Number) -> tuple[Signature, ...]:
    """The loss classes attaining the minimum at ``p``, sorted by compact
    label (used for regime-stability checks)."""
    x = p if isinstance(p, Sqrt2Num) else Sqrt2Num(Fraction(p))
    size = min_cover_size(n)
    sigs = {signature(aset) for aset in adequate_sets_cached(n, size)}
    values = {sig: signature_poly(sig)(x) for sig in sigs}
    best = None
    for value in values.values():
        if best is None or number_sign(value - best) < 0:
            best = value
    return tuple(
        sorted(
            (sig for sig in sigs if number_sign(values[sig] - best) == 0),
            key=lambda s: s.compact(),
        )
    )


# ---------------------------------------------------------------------------
# Covering-code cross-check and complexity comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoveringReport:
    """Comparison of the computed minimum loss-set size with the published
    covering-code size K(n, 1), plus the symmetric-game win bound."""

    n_players: int
    computed_min_size: int | None
    covering_code_size: int
    agrees: bool | None
    symmetric_win_probability: Fraction


def covering_check(n: int) -> CoveringReport:
    """Check min loss-set size == K(n, 1); computed directly for n <= 5,
    table-only beyond."""
    if n not in COVERING_CODE_SIZE:
        raise ValueError("covering-code sizes are tabulated for n in 2..9")
    k = COVERING_CODE_SIZE[n]
    computed = min_cover_size(n) if n <= 5 else None
    return CoveringReport(
        n_players=n,
        computed_min_size=computed,
        covering_code_size=k,
        agrees=None if computed is None else computed == k,
        symmetric_win_probability=1 - Fraction(k, 1 << n),
    )


def sci_2sig(value: int) -> str:
    """Scientific notation with 2 significant digits, round half even:
    1853020188851841 -> "1.9E+15"."""
    if value <= 0:
        raise ValueError("positive integers only")
    digits = str(value)
    exp = len(digits) - 1
    if exp == 0:
        return "%d.0E+0" % value
    head = value // 10 ** (exp - 1)  # two leading digits
    rest = value % 10 ** (exp - 1)
    half = 5 * 10 ** (exp - 2) if exp >= 2 else 0
    if exp >= 2 and (rest > half or (rest == half and head % 2 == 1)):
        head += 1
    if head == 100:
        head = 10
        exp += 1
    return "%d.%dE+%d" % (head // 10, head % 10, exp)


@dataclass(frozen=True)
class ComplexityRow:
    """Strategy-space sizes for one n: full brute force 3^(2^(n-1) n),
    the reduced bound 3^((2^(n-1)-2) n), and the number of candidate loss
    sets C(2^n, size)."""

    n_players: int
    min_size: int
    full_strategies: int
    reduced_strategies: int
    candidate_sets: int

    @property
    def full_sci(self) -> str:
        return sci_2sig(self.full_strategies)

    @property
    def reduced_sci(self) -> str:
        return sci_2sig(self.reduced_strategies)

    @property
    def candidate_sci(self) -> str:
        return sci_2sig(self.candidate_sets)


def complexity_table(n_values: Iterable[int] = range(2, 10)) -> list[ComplexityRow]:
    """Exact strategy-space sizes for each n, loss-set sizes from the
    covering-code table."""
    rows = []
    for n in n_values:
        if n not in COVERING_CODE_SIZE:
            raise ValueError("n must be in 2..9, got %r" % (n,))
        size = COVERING_CODE_SIZE[n]
        width = 1 << (n - 1)
        rows.append(
            ComplexityRow(
                n_players=n,
                min_size=size,
                full_strategies=3 ** (width * n),
                reduced_strategies=3 ** ((width - 2) * n),
                candidate_sets=math.comb(1 << n, size),
            )
        )
    return rows
