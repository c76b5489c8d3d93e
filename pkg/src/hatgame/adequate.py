"""Adequate sets: the loss sets of hat-game strategies.

A nonempty set A of configurations is *adequate* when every configuration
shares at least one score coordinate with some member of A.  Adequate sets
are exactly the possible sets of losing configurations of deterministic
strategies, so maximizing the team's win probability is the same as finding
an adequate set of minimum total probability.

Sharing a score coordinate with a member of A means agreeing with it on all
bits but (at most) one, i.e. lying within Hamming distance 1 of it.  An
adequate set is therefore precisely a binary covering code of radius one on
the N-cube.  We exploit that: the production adequacy test ORs precomputed
radius-1 ball bitmasks, while the direct score-comparison definition is
kept as an independently-coded oracle for cross-checking.

The weight (probability) of an element depends only on its number of white
bits, so each set is summarized by its *signature*: the histogram
(c_0, ..., c_N) counting elements by white-bit count.  A set's probability
is then sum_j c_j p^j q^(N-j).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .core import (
    MAX_PLAYERS,
    GameParams,
    HatGameError,
    ResourceLimitError,
    config_probability,
    count_whites,
    score_table,
)


class NoAdequateSetError(HatGameError, ValueError):
    """No adequate set of the requested size exists."""


# ---------------------------------------------------------------------------
# Coverage masks
# ---------------------------------------------------------------------------


def ball_mask(code: int, n: int) -> int:
    """Bitmask over all 2^n configurations of the radius-1 ball around
    ``code``: the configuration itself plus its n single-bit flips."""
    if not 2 <= n <= MAX_PLAYERS:
        raise ValueError("n must be in [2, %d]" % MAX_PLAYERS)
    if not 0 <= code < (1 << n):
        raise ValueError("configuration %r out of range for n=%d" % (code, n))
    mask = 1 << code
    for k in range(n):
        mask |= 1 << (code ^ (1 << k))
    return mask


@lru_cache(maxsize=32)
def _balls(n: int) -> tuple[int, ...]:
    return tuple(ball_mask(code, n) for code in range(1 << n))


def _full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def _validate_elements(elements: Sequence[int], n: int) -> tuple[int, ...]:
    elems = tuple(elements)
    if not elems:
        raise ValueError("an adequate set must be nonempty")
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be distinct")
    for e in elems:
        if not 0 <= e < (1 << n):
            raise ValueError("element %r out of range for n=%d" % (e, n))
    return elems


# ---------------------------------------------------------------------------
# Adequacy oracles
# ---------------------------------------------------------------------------


def is_adequate(elements: Sequence[int], n: int) -> bool:
    """Definition-based adequacy test via score comparison.

    True iff every configuration has some score coordinate equal to the
    same coordinate of some element.  Kept independent of the ball-cover
    implementation on purpose; the two are cross-checked in the test suite.
    """
    elems = _validate_elements(elements, n)
    table = score_table(n)
    # per player, the set of scores displayed by the chosen elements
    seen = [set() for _ in range(n)]
    for e in elems:
        vec = table[e]
        for i in range(n):
            seen[i].add(vec[i])
    for code in range(1 << n):
        vec = table[code]
        if not any(vec[i] in seen[i] for i in range(n)):
            return False
    return True


def is_adequate_hamming(elements: Sequence[int], n: int) -> bool:
    """Radius-1 covering-code test: do the balls around the elements cover
    the whole n-cube?  Must agree with :func:`is_adequate` everywhere."""
    elems = _validate_elements(elements, n)
    balls = _balls(n)
    covered = 0
    for e in elems:
        covered |= balls[e]
    return covered == _full_mask(n)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdequateSet:
    """A validated adequate set: sorted distinct configurations covering
    the whole cube within Hamming distance one."""

    elements: tuple[int, ...]
    n_players: int

    def __post_init__(self):
        elems = tuple(sorted(_validate_elements(self.elements, self.n_players)))
        object.__setattr__(self, "elements", elems)
        if not is_adequate_hamming(elems, self.n_players):
            raise ValueError(
                "%r is not adequate for n=%d" % (elems, self.n_players)
            )

    @property
    def size(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class Signature:
    """Histogram (c_0, ..., c_N): c_j elements have exactly j white bits.

    Two sets with the same signature have the same probability for every p,
    namely sum_j c_j p^j q^(N-j).
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) < 3 or any(c < 0 for c in self.counts):
            raise ValueError("invalid signature counts %r" % (self.counts,))

    @property
    def n_players(self) -> int:
        return len(self.counts) - 1

    @property
    def size(self) -> int:
        return sum(self.counts)

    def compact(self) -> str:
        """Digit-string form like "01210"; dash-separated if any count
        exceeds 9."""
        if all(c <= 9 for c in self.counts):
            return "".join(str(c) for c in self.counts)
        return "-".join(str(c) for c in self.counts)

    @classmethod
    def from_compact(cls, text: str) -> "Signature":
        if "-" in text:
            return cls(tuple(int(t) for t in text.split("-")))
        return cls(tuple(int(ch) for ch in text))

    def reversed(self) -> "Signature":
        """Signature of the bitwise-complemented set (colors swapped)."""
        return Signature(tuple(reversed(self.counts)))

    def probability(self, params: GameParams) -> Fraction:
        if params.n_players != self.n_players:
            raise ValueError("signature length does not match params")
        p, q = params.p_white, params.q_black
        n = self.n_players
        return sum(
            (c * p**j * q ** (n - j) for j, c in enumerate(self.counts)),
            Fraction(0),
        )

    def __str__(self):
        return self.compact()


def signature(aset: AdequateSet) -> Signature:
    """Zero-count histogram of the set's elements."""
    n = aset.n_players
    counts = [0] * (n + 1)
    for e in aset.elements:
        counts[count_whites(e, n)] += 1
    return Signature(tuple(counts))


def set_probability(aset: AdequateSet, params: GameParams) -> Fraction:
    """Total probability of the set's configurations (the strategy's loss)."""
    if params.n_players != aset.n_players:
        raise ValueError("params are for %d players, set is for %d"
                         % (params.n_players, aset.n_players))
    return sum(
        (config_probability(e, params) for e in aset.elements), Fraction(0)
    )


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


def _cover_tuples(n: int, size: int) -> Iterator[tuple[int, ...]]:
    """All size-``size`` adequate subsets of [0, 2^n), lexicographically.

    Depth-first search over ascending element choices with two exact
    prunes: a counting bound (each element covers at most n+1 new
    configurations) and a reachability bound (the smallest uncovered
    configuration must still be coverable by some remaining candidate).
    """
    h = 1 << n
    if not 1 <= size <= h:
        raise ValueError("size must be in [1, %d], got %r" % (h, size))
    full = _full_mask(n)
    balls = _balls(n)
    # largest element whose ball covers a given configuration
    ballmax = [0] * h
    for c in range(h):
        ballmax[c] = max(c, *(c ^ (1 << k) for k in range(n)))
    per_ball = n + 1
    chosen: list[int] = []

    def rec(start: int, covered: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if covered == full:
            if remaining == 0:
                yield tuple(chosen)
            else:
                # every completion stays adequate
                base = tuple(chosen)
                for extra in itertools.combinations(range(start, h), remaining):
                    yield base + extra
            return
        if remaining == 0:
            return
        uncovered = full & ~covered
        if uncovered.bit_count() > remaining * per_ball:
            return
        low = (uncovered & -uncovered).bit_length() - 1
        if ballmax[low] < start:
            return
        if remaining == 1:
            # the last element alone must cover everything still uncovered,
            # so it lies in the ball around `low`
            lowball = balls[low]
            for e in range(start, h):
                if (lowball >> e) & 1 and covered | balls[e] == full:
                    chosen.append(e)
                    yield tuple(chosen)
                    chosen.pop()
            return
        for e in range(start, h - remaining + 1):
            chosen.append(e)
            yield from rec(e + 1, covered | balls[e], remaining - 1)
            chosen.pop()

    yield from rec(0, 0, size)


def enumerate_adequate(n: int, size: int) -> Iterator[AdequateSet]:
    """Stream every adequate set of exactly ``size`` elements, in
    lexicographic order of element tuples.  May be empty."""
    for elems in _cover_tuples(n, size):
        yield AdequateSet(elems, n)


@lru_cache(maxsize=8)
def adequate_sets_cached(n: int, size: int) -> tuple[AdequateSet, ...]:
    """Materialized :func:`enumerate_adequate`, cached for reuse.

    The n=5, size=7 enumeration scans millions of subsets; analysis
    routines that need the same list (optimal sets, class histograms,
    optimal-set counts) share it through this cache.
    """
    return tuple(enumerate_adequate(n, size))


@lru_cache(maxsize=32)
def min_cover_size(n: int) -> int:
    """Smallest size of an adequate set for n players.

    Searches ascending from the sphere-covering bound 2^n/(n+1); equals the
    minimum size K(n,1) of a binary covering code of radius 1.
    """
    if not 2 <= n <= MAX_PLAYERS:
        raise ValueError("n must be in [2, %d]" % MAX_PLAYERS)
    h = 1 << n
    lower = -(-h // (n + 1))  # ceil
    for size in range(max(1, lower), h + 1):
        for _ in _cover_tuples(n, size):
            return size
    raise AssertionError("the full configuration set is always adequate")


def optimal_sets(
    n: int, params: GameParams, size: int
) -> tuple[list[AdequateSet], Fraction]:
    """All minimum-probability adequate sets of exactly ``size`` elements
    (lexicographic order) together with the minimum value."""
    if params.n_players != n:
        raise ValueError("params are for %d players, requested n=%d"
                         % (params.n_players, n))
    best: Fraction | None = None
    winners: list[AdequateSet] = []
    for aset in adequate_sets_cached(n, size):
        value = set_probability(aset, params)
        if best is None or value < best:
            best = value
            winners = [aset]
        elif value == best:
            winners.append(aset)
    if best is None:
        raise NoAdequateSetError(
            "no adequate set of size %d exists for n=%d" % (size, n)
        )
    return winners, best


# ---------------------------------------------------------------------------
# Global optimization: minimum-weight cover branch and bound
# ---------------------------------------------------------------------------


def _weights(n: int, params: GameParams) -> list[Fraction]:
    return [config_probability(c, params) for c in range(1 << n)]


def _greedy_cover(n: int, weights: Sequence[Fraction]) -> list[int]:
    """Cheap feasible cover used as the initial incumbent: repeatedly take
    the element with the best (new coverage / weight) ratio."""
    full = _full_mask(n)
    balls = _balls(n)
    covered = 0
    chosen: list[int] = []
    while covered != full:
        best_e = -1
        best_key = None
        for e in range(1 << n):
            gain = (balls[e] & ~covered).bit_count()
            if gain == 0:
                continue
            key = (weights[e] / gain, weights[e], e)
            if best_key is None or key < best_key:
                best_key = key
                best_e = e
        covered |= balls[best_e]
        chosen.append(best_e)
    return chosen


def min_cover_optimize(
    n: int,
    params: GameParams,
    max_size: int | None = None,
    node_budget: int | None = None,
) -> tuple[AdequateSet, Fraction]:
    """Adequate set of globally minimum probability, over all sizes.

    Exact branch and bound over radius-1 ball covers: branch on the
    elements able to cover the currently lowest-index uncovered
    configuration (cheapest first, with earlier branches banned in later
    ones so no cover is visited twice), prune on the incumbent using the
    cheapest way to cover that configuration.  Because all weights are
    strictly positive, the returned optimum is automatically irredundant.

    ``node_budget`` bounds the search-tree size for best-effort runs on
    larger n; exceeding it raises :class:`ResourceLimitError`.
    """
    if params.n_players != n:
        raise ValueError("params are for %d players, requested n=%d"
                         % (params.n_players, n))
    h = 1 << n
    full = _full_mask(n)
    balls = _balls(n)
    weights = _weights(n, params)
    # candidate elements covering each configuration, cheapest first
    coverers = [
        sorted((c, *(c ^ (1 << k) for k in range(n))), key=lambda e: (weights[e], e))
        for c in range(h)
    ]
    cheapest_cover = [min(weights[e] for e in coverers[c]) for c in range(h)]

    greedy = _greedy_cover(n, weights)
    best_value = sum((weights[e] for e in greedy), Fraction(0))
    best_set: tuple[int, ...] = tuple(sorted(greedy))
    if max_size is not None and len(greedy) > max_size:
        best_value = None  # greedy incumbent not feasible under the cap
        best_set = ()

    nodes = 0

    def rec(covered: int, chosen: tuple[int, ...], weight: Fraction, banned: int):
        nonlocal best_value, best_set, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise ResourceLimitError(
                "cover search exceeded the node budget (%d)" % node_budget
            )
        if covered == full:
            if best_value is None or weight < best_value:
                best_value = weight
                best_set = chosen
            return
        if max_size is not None and len(chosen) >= max_size:
            return
        uncovered = full & ~covered
        low = (uncovered & -uncovered).bit_length() - 1
        if best_value is not None and weight + cheapest_cover[low] >= best_value:
            return
        tried = 0
        for e in coverers[low]:
            if (banned >> e) & 1 or e in chosen:
                continue
            rec(covered | balls[e], chosen + (e,), weight + weights[e], banned | tried)
            tried |= 1 << e
        return

    rec(0, (), Fraction(0), 0)
    if best_value is None:
        raise NoAdequateSetError(
            "no adequate set within max_size=%r exists for n=%d" % (max_size, n)
        )
    aset = AdequateSet(tuple(sorted(best_set)), n)
    return aset, best_value


def _min_cover_exact_size(
    n: int, params: GameParams, size: int
) -> tuple[AdequateSet, Fraction] | None:
    """Minimum-probability adequate set of *exactly* ``size`` elements.

    Any adequate set is an irredundant cover plus padding, and for a fixed
    cover the optimal padding is just the cheapest elements not already
    chosen.  The branch-and-bound therefore explores covers as in
    :func:`min_cover_optimize` and closes each completed cover with greedy
    padding, with an admissible bound built from prefix sums of the
    globally cheapest weights.
    """
    h = 1 << n
    if size > h:
        return None
    full = _full_mask(n)
    balls = _balls(n)
    weights = _weights(n, params)
    order = sorted(range(h), key=lambda e: (weights[e], e))
    coverers = [
        sorted((c, *(c ^ (1 << k) for k in range(n))), key=lambda e: (weights[e], e))
        for c in range(h)
    ]

    best: list = [None, None]  # value, sorted tuple

    def pad_value(chosen: set[int], need: int) -> tuple[Fraction, list[int]]:
        extras: list[int] = []
        total = Fraction(0)
        for e in order:
            if len(extras) == need:
                break
            if e in chosen:
                continue
            extras.append(e)
            total += weights[e]
        return total, extras

    def cheapest_outside(chosen: set[int], count: int) -> Fraction:
        total = Fraction(0)
        taken = 0
        for e in order:
            if taken == count:
                break
            if e in chosen:
                continue
            total += weights[e]
            taken += 1
        return total

    def rec(covered: int, chosen: tuple[int, ...], weight: Fraction, banned: int):
        k = len(chosen)
        if covered == full:
            extra_w, extras = pad_value(set(chosen), size - k)
            value = weight + extra_w
            if best[0] is None or value < best[0]:
                best[0] = value
                best[1] = tuple(sorted(chosen + tuple(extras)))
            return
        if k >= size:
            return
        uncovered = full & ~covered
        if uncovered.bit_count() > (size - k) * (n + 1):
            return
        if best[0] is not None:
            bound = weight + cheapest_outside(set(chosen), size - k)
            if bound >= best[0]:
                return
        low = (uncovered & -uncovered).bit_length() - 1
        tried = 0
        for e in coverers[low]:
            if (banned >> e) & 1 or e in chosen:
                continue
            rec(covered | balls[e], chosen + (e,), weight + weights[e], banned | tried)
            tried |= 1 << e

    rec(0, (), Fraction(0), 0)
    if best[0] is None:
        return None
    return AdequateSet(best[1], n), best[0]


# ---------------------------------------------------------------------------
# Size sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    """One row of a size sweep: the best adequate set of exactly ``size``
    elements (``witness`` is the lexicographically smallest one when the
    row was computed exhaustively, otherwise the branch-and-bound
    optimum)."""

    size: int
    signature: Signature | None
    min_sum: Fraction | None
    witness: AdequateSet | None


# exhaustive enumeration is used while C(2^n, size) stays below this
# (covers everything at n <= 4 and sizes up to 9 at n = 5); beyond it the
# cardinality-constrained branch and bound (equally exact, validated
# against exhaustion where both run) takes over
_EXHAUSTIVE_SUBSET_LIMIT = 30_000_000


def _sweep_row_exhaustive(n: int, size: int, params: GameParams) -> SweepRow:
    """Exhaustive sweep row.

    Streams the raw element tuples and buckets them by signature, since
    distinct signatures are few and a signature fixes the probability;
    exact arithmetic then happens once per signature instead of once per
    set.  The witness is the lexicographically first set attaining the
    minimum.
    """
    whites = [count_whites(c, n) for c in range(1 << n)]
    first_by_sig: dict[tuple[int, ...], tuple[int, ...]] = {}
    for t in _cover_tuples(n, size):
        counts = [0] * (n + 1)
        for e in t:
            counts[whites[e]] += 1
        key = tuple(counts)
        if key not in first_by_sig:
            first_by_sig[key] = t
    if not first_by_sig:
        return SweepRow(size, None, None, None)
    best_val: Fraction | None = None
    best_wit: tuple[int, ...] | None = None
    best_sig: tuple[int, ...] | None = None
    for key, wit in first_by_sig.items():
        val = Signature(key).probability(params)
        if best_val is None or val < best_val or (val == best_val and wit < best_wit):
            best_val, best_wit, best_sig = val, wit, key
    return SweepRow(
        size, Signature(best_sig), best_val, AdequateSet(best_wit, n)
    )


def size_sweep(
    n: int,
    sizes: Iterable[int],
    params: GameParams,
    allow_branch_and_bound: bool = True,
) -> list[SweepRow]:
    """Minimum probability and its signature for each requested set size.

    Rows whose size admits no adequate set carry ``None`` entries.  For
    n >= 6 the search space is beyond desk scale and the call is refused.
    """
    if params.n_players != n:
        raise ValueError("params are for %d players, requested n=%d"
                         % (params.n_players, n))
    if n > 5:
        raise ResourceLimitError("size sweeps are supported for n <= 5")
    rows: list[SweepRow] = []
    for size in sizes:
        if not 1 <= size <= (1 << n):
            raise ValueError("size %r out of range for n=%d" % (size, n))
        if math.comb(1 << n, size) <= _EXHAUSTIVE_SUBSET_LIMIT:
            rows.append(_sweep_row_exhaustive(n, size, params))
        else:
            if not allow_branch_and_bound:
                raise ResourceLimitError(
                    "size %d for n=%d requires the branch-and-bound search, "
                    "which was disallowed" % (size, n)
                )
            found = _min_cover_exact_size(n, params, size)
            if found is None:
                rows.append(SweepRow(size, None, None, None))
            else:
                witness, best = found
                rows.append(SweepRow(size, signature(witness), best, witness))
    return rows
