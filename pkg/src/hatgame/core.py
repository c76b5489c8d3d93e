"""Exact core model of the N-player, two-color hat guessing game.

N players each receive a white (0) or black (1) hat, independently, with
white probability p and black probability q = 1 - p.  Every player sees the
other N-1 hats and must simultaneously guess their own color or pass.  The
team wins when at least one guess is correct and no guess is wrong.

A full hat assignment is a *configuration*: an N-bit integer whose most
significant bit is player 1's hat.  What player i actually observes is the
configuration with bit i deleted, read as an (N-1)-bit integer in
[0, 2^(N-1) - 1]; we call that the player's *score*.  A deterministic team
strategy is therefore an N x 2^(N-1) *decision matrix* whose entries say,
per player and observed score, whether to guess black (-1), pass (0) or
guess white (+1).  A fourth marker (``FREE``, printed ``*``, numeric 3)
denotes matrix cells whose value provably cannot matter; it appears only in
synthesized matrices, never in hand-written strategies.

All probabilities are exact `fractions.Fraction` values.  Optimality
boundaries in this problem sit on knife edges (including quadratic
irrationals), so nothing in this package evaluates probabilities in
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

#: Hard cap on the number of players.  Score tables hold N * 2^(N-1)
#: entries and coverage bitmasks span 2^N configurations; beyond 16 players
#: the exact method stops being a desk-scale computation.
MAX_PLAYERS = 16

# Decision values (numeric interchange form; FREE prints as "*").
GUESS_BLACK = -1
PASS = 0
GUESS_WHITE = 1
FREE = 3

CONCRETE_DECISIONS = (GUESS_BLACK, PASS, GUESS_WHITE)
_VALID_ENTRIES = frozenset((GUESS_BLACK, PASS, GUESS_WHITE, FREE))


class HatGameError(Exception):
    """Base class for errors raised by this package."""


class ResourceLimitError(HatGameError):
    """A computation was refused or aborted because it exceeds the
    supported problem size."""


def exact_fraction(value) -> Fraction:
    """Convert ``value`` to an exact Fraction, rejecting floats.

    Floats are refused on purpose: Fraction(0.9) is the binary value
    0.90000000000000002220446..., which silently breaks every knife-edge
    comparison downstream.  Pass strings like "9/10" or "0.9" instead.
    """
    if isinstance(value, float):
        raise TypeError(
            "refusing inexact float %r; pass a Fraction, int or string "
            "like '9/10' or '0.9'" % (value,)
        )
    return Fraction(value)


@dataclass(frozen=True)
class GameParams:
    """Number of players plus the exact hat-color distribution.

    ``q_black`` may be omitted; it is derived as 1 - p_white.  If both are
    given they must sum to exactly 1.
    """

    n_players: int
    p_white: Fraction
    q_black: Fraction | None = None

    def __post_init__(self):
        if not isinstance(self.n_players, int):
            raise TypeError("n_players must be an int")
        if not 2 <= self.n_players <= MAX_PLAYERS:
            raise ValueError(
                "n_players must be in [2, %d], got %r" % (MAX_PLAYERS, self.n_players)
            )
        p = exact_fraction(self.p_white)
        object.__setattr__(self, "p_white", p)
        if not 0 < p < 1:
            raise ValueError("p_white must satisfy 0 < p < 1, got %s" % (p,))
        if self.q_black is None:
            object.__setattr__(self, "q_black", 1 - p)
        else:
            q = exact_fraction(self.q_black)
            object.__setattr__(self, "q_black", q)
            if p + q != 1:
                raise ValueError("p_white + q_black must equal 1 exactly")


def _check_config(code: int, n: int) -> None:
    if not 2 <= n <= MAX_PLAYERS:
        raise ValueError("n must be in [2, %d], got %r" % (MAX_PLAYERS, n))
    if not 0 <= code < (1 << n):
        raise ValueError("configuration %r out of range for n=%d" % (code, n))


def bits(code: int, n: int) -> tuple[int, ...]:
    """Hat bits (b_1, ..., b_N) of a configuration; b_1 is the MSB."""
    _check_config(code, n)
    return tuple((code >> (n - k)) & 1 for k in range(1, n + 1))


def code_from_bits(hat_bits: Sequence[int]) -> int:
    """Inverse of :func:`bits`."""
    code = 0
    for b in hat_bits:
        if b not in (0, 1):
            raise ValueError("hat bits must be 0 or 1")
        code = (code << 1) | b
    return code


def count_whites(code: int, n: int) -> int:
    """Number of white hats (zero bits) in the configuration."""
    _check_config(code, n)
    return n - code.bit_count()


def flip(code: int, n: int, player: int) -> int:
    """Flip player ``player``'s hat bit (players are 1-based).

    The result is the *counterpart* configuration: the unique other
    configuration in which that player observes the same score.
    """
    _check_config(code, n)
    if not 1 <= player <= n:
        raise ValueError("player must be in [1, %d], got %r" % (n, player))
    return code ^ (1 << (n - player))


def score(code: int, n: int, player: int) -> int:
    """What ``player`` sees: the other N-1 bits read MSB-first.

    s_i = sum_{k<i} b_k 2^(N-k-1) + sum_{k>i} b_k 2^(N-k)
    """
    _check_config(code, n)
    if not 1 <= player <= n:
        raise ValueError("player must be in [1, %d], got %r" % (n, player))
    b = bits(code, n)
    s = 0
    for k in range(1, player):
        s += b[k - 1] << (n - k - 1)
    for k in range(player + 1, n + 1):
        s += b[k - 1] << (n - k)
    return s


def score_vector(code: int, n: int) -> tuple[int, ...]:
    """All N scores (s_1, ..., s_N) of a configuration."""
    return tuple(score(code, n, i) for i in range(1, n + 1))


@lru_cache(maxsize=32)
def score_table(n: int) -> tuple[tuple[int, ...], ...]:
    """score_table(n)[code][i-1] == score(code, n, i), cached per n."""
    return tuple(score_vector(code, n) for code in range(1 << n))


def config_probability(code: int, params: GameParams) -> Fraction:
    """Probability p^z q^(N-z) of a configuration with z white hats."""
    z = count_whites(code, params.n_players)
    return params.p_white**z * params.q_black ** (params.n_players - z)


# ---------------------------------------------------------------------------
# Decision matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecisionMatrix:
    """N x 2^(N-1) grid of decisions, one row per player.

    ``rows[i-1][s]`` is player i's decision upon observing score s.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if not 2 <= n <= MAX_PLAYERS:
            raise ValueError("matrix must have between 2 and %d rows" % MAX_PLAYERS)
        width = 1 << (n - 1)
        for row in rows:
            if len(row) != width:
                raise ValueError(
                    "each of the %d rows must have 2^(N-1)=%d entries" % (n, width)
                )
            for v in row:
                if v not in _VALID_ENTRIES:
                    raise ValueError("invalid decision value %r" % (v,))

    @property
    def n_players(self) -> int:
        return len(self.rows)

    @property
    def n_scores(self) -> int:
        return 1 << (self.n_players - 1)

    def entry(self, player: int, score_value: int) -> int:
        """Decision of 1-based ``player`` at ``score_value``."""
        return self.rows[player - 1][score_value]

    def free_cells(self) -> tuple[tuple[int, int], ...]:
        """(player, score) positions holding FREE, row-major order."""
        return tuple(
            (i + 1, j)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v == FREE
        )

    def substitute_free(self, fill) -> "DecisionMatrix":
        """Replace FREE cells; ``fill`` is a decision value or a
        {(player, score): decision} mapping."""
        if isinstance(fill, int):
            mapping = {cell: fill for cell in self.free_cells()}
        else:
            mapping = dict(fill)
        rows = []
        for i, row in enumerate(self.rows):
            rows.append(
                tuple(
                    mapping.get((i + 1, j), v) if v == FREE else v
                    for j, v in enumerate(row)
                )
            )
        out = DecisionMatrix(tuple(rows))
        leftover = out.free_cells()
        if leftover:
            raise ValueError("substitution left FREE cells at %r" % (leftover,))
        return out

    # -- text format -------------------------------------------------------
    #
    # One row per player, whitespace-separated tokens from {-1, 0, 1, *},
    # exactly 2^(N-1) tokens per row; '#' starts a comment line.

    _TOKENS = {GUESS_BLACK: "-1", PASS: "0", GUESS_WHITE: "1", FREE: "*"}
    _VALUES = {"-1": GUESS_BLACK, "0": PASS, "1": GUESS_WHITE, "*": FREE}

    def to_text(self) -> str:
        return "\n".join(
            " ".join(self._TOKENS[v] for v in row) for row in self.rows
        )

    @classmethod
    def from_text(cls, text: str) -> "DecisionMatrix":
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                rows.append(tuple(cls._VALUES[tok] for tok in stripped.split()))
            except KeyError as exc:
                raise ValueError(
                    "line %d: invalid token %s (expected -1, 0, 1 or *)"
                    % (lineno, exc)
                ) from None
        if not rows:
            raise ValueError("no matrix rows found")
        return cls(tuple(rows))

    def to_json_rows(self) -> dict[str, list[int]]:
        """JSON interchange form: rows keyed by 1-based player index,
        FREE encoded as 3."""
        return {str(i + 1): list(row) for i, row in enumerate(self.rows)}


def all_pass_matrix(n: int) -> DecisionMatrix:
    """The everyone-always-passes matrix (wins nothing)."""
    return DecisionMatrix(tuple(tuple([PASS] * (1 << (n - 1))) for _ in range(n)))


def wins(matrix: DecisionMatrix, code: int, free_as: int = PASS) -> bool:
    """Does the team win on configuration ``code``?

    The team wins iff every player's decision is either a pass or the
    correct guess for their own hat, and not everyone passes.  FREE cells
    are read as ``free_as`` (pass by default).
    """
    n = matrix.n_players
    _check_config(code, n)
    if free_as not in CONCRETE_DECISIONS:
        raise ValueError("free_as must be a concrete decision, got %r" % (free_as,))
    scores = score_table(n)[code]
    rows = matrix.rows
    someone_guessed = False
    for i in range(n):
        d = rows[i][scores[i]]
        if d == FREE:
            d = free_as
        if d == PASS:
            continue
        # correct guess for bit b is 1 - 2b: +1 on white (0), -1 on black (1)
        if d != 1 - 2 * ((code >> (n - 1 - i)) & 1):
            return False
        someone_guessed = True
    return someone_guessed


def losing_configs(matrix: DecisionMatrix, free_as: int = PASS) -> tuple[int, ...]:
    """All configurations the matrix loses on, ascending."""
    n = matrix.n_players
    return tuple(c for c in range(1 << n) if not wins(matrix, c, free_as))


def evaluate_matrix(
    matrix: DecisionMatrix, params: GameParams, free_as: int = PASS
) -> Fraction:
    """Exact win probability of the strategy encoded by ``matrix``."""
    if params.n_players != matrix.n_players:
        raise ValueError(
            "matrix is for %d players but params specify %d"
            % (matrix.n_players, params.n_players)
        )
    total = Fraction(0)
    for code in range(1 << matrix.n_players):
        if wins(matrix, code, free_as):
            total += config_probability(code, params)
    return total
