"""Decision-matrix synthesis and brute-force strategy search.

An adequate set A induces a strategy that loses exactly on A: start from
the all-pass matrix and, for every element, make each player's entry at
the score they see in that configuration the *wrong* guess for their hat
there (bit b maps to guess 2b - 1).  Two elements write the same cell only
when they are counterparts (they differ in that player's bit alone), and
then they write opposite guesses; such cells are provably unconstrained
and are marked FREE.

The other direction is brute force: for two and three players the full
strategy space (3^4 resp. 3^12 matrices) is searched outright, giving an
oracle completely independent of the covering-set machinery.  The search
is vectorized with numpy over the ternary encoding of matrices but all
probability comparisons stay exact: matrices are bucketed by their integer
win-sets first and only the handful of distinct win-sets is evaluated with
Fraction arithmetic.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np

from .core import (
    FREE,
    GUESS_BLACK,
    GUESS_WHITE,
    PASS,
    DecisionMatrix,
    GameParams,
    config_probability,
    evaluate_matrix,
    score_table,
)
from .adequate import AdequateSet


def matrix_from_set(aset: AdequateSet) -> DecisionMatrix:
    """Decision matrix that loses exactly on the given adequate set.

    For every element with bits b and scores s, cell (i, s_i) receives the
    guess 2 b_i - 1; a cell written twice receives FREE (the two writers
    are counterparts and demand opposite guesses, and either choice - or a
    pass - turns out not to matter).
    """
    n = aset.n_players
    table = score_table(n)
    rows = [[PASS] * (1 << (n - 1)) for _ in range(n)]
    for code in aset.elements:
        scores = table[code]
        for i in range(n):
            b = (code >> (n - 1 - i)) & 1
            cell = rows[i]
            if cell[scores[i]] == PASS:
                cell[scores[i]] = 2 * b - 1
            else:
                cell[scores[i]] = FREE
    return DecisionMatrix(tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# Brute force over the full strategy space (n <= 3)
# ---------------------------------------------------------------------------


def _matrix_from_ternary_index(index: int, n: int) -> DecisionMatrix:
    """Decode a matrix from its ternary code.

    Cells are ordered player-major, score-minor, with player 1 / score 0
    the most significant digit; each digit d in {0, 1, 2} encodes the
    decision d - 1.
    """
    width = 1 << (n - 1)
    cells = n * width
    digits = []
    for _ in range(cells):
        digits.append(index % 3 - 1)
        index //= 3
    digits.reverse()
    rows = tuple(
        tuple(digits[i * width : (i + 1) * width]) for i in range(n)
    )
    return DecisionMatrix(rows)


def brute_force_optimal(
    n: int, params: GameParams
) -> tuple[Fraction, list[DecisionMatrix]]:
    """Exact maximum win probability over *all* FREE-less matrices,
    together with every maximizer, in ascending ternary-code order.

    Only n = 2 (81 strategies) and n = 3 (531441 strategies) are accepted;
    the space grows as 3^(n 2^(n-1)).
    """
    if n not in (2, 3):
        raise ValueError("brute force is supported for n in {2, 3} only")
    if params.n_players != n:
        raise ValueError("params are for %d players, requested n=%d"
                         % (params.n_players, n))
    width = 1 << (n - 1)
    cells = n * width
    total = 3**cells
    idx = np.arange(total, dtype=np.int64)
    # digit planes, most significant digit = cell (player 1, score 0)
    planes = [
        (idx // 3 ** (cells - 1 - pos)) % 3 - 1 for pos in range(cells)
    ]
    table = score_table(n)
    win_mask = np.zeros(total, dtype=np.int64)
    for code in range(1 << n):
        scores = table[code]
        ok = np.ones(total, dtype=bool)
        guessed = np.zeros(total, dtype=bool)
        for i in range(n):
            d = planes[i * width + scores[i]]
            allowed = 1 - 2 * ((code >> (n - 1 - i)) & 1)
            ok &= (d == 0) | (d == allowed)
            guessed |= d != 0
        win_mask |= (ok & guessed).astype(np.int64) << code
    # exact evaluation happens once per distinct win-set, not per matrix
    probs = [config_probability(c, params) for c in range(1 << n)]
    distinct = np.unique(win_mask)
    values = {
        int(m): sum(
            (probs[c] for c in range(1 << n) if (int(m) >> c) & 1), Fraction(0)
        )
        for m in distinct
    }
    best = max(values.values())
    best_masks = np.array(
        [m for m in distinct if values[int(m)] == best], dtype=np.int64
    )
    winners = np.nonzero(np.isin(win_mask, best_masks))[0]
    matrices = [_matrix_from_ternary_index(int(i), n) for i in winners]
    return best, matrices


# ---------------------------------------------------------------------------
# All matrices realizing a given loss set
# ---------------------------------------------------------------------------


def all_matrices_for_set(aset: AdequateSet) -> list[DecisionMatrix]:
    """Every FREE-less matrix whose winning configurations are exactly the
    complement of the set, in ascending ternary-code order.

    Backtracking over cells with constraint checks per configuration:
    winning configurations may contain no wrong guess and need at least
    one correct one; losing configurations must contain a wrong guess or
    be all-pass.
    """
    n = aset.n_players
    width = 1 << (n - 1)
    table = score_table(n)
    lose = frozenset(aset.elements)
    # cell index (player-major, score-minor) -> configurations touching it
    touching: list[list[int]] = [[] for _ in range(n * width)]
    cfg_cells: list[list[int]] = []
    cfg_allowed: list[list[int]] = []
    for code in range(1 << n):
        scores = table[code]
        cls = [i * width + scores[i] for i in range(n)]
        cfg_cells.append(cls)
        cfg_allowed.append([1 - 2 * ((code >> (n - 1 - i)) & 1) for i in range(n)])
        for cell in cls:
            touching[cell].append(code)

    values: list[int | None] = [None] * (n * width)
    out: list[DecisionMatrix] = []

    def config_ok(code: int) -> bool:
        """Feasibility of a configuration under the partial assignment."""
        assigned = []
        complete = True
        has_wrong = False
        has_right = False
        for cell, allowed in zip(cfg_cells[code], cfg_allowed[code]):
            v = values[cell]
            if v is None:
                complete = False
                continue
            if v == allowed:
                has_right = True
            elif v != PASS:
                has_wrong = True
        if code in lose:
            # must NOT win: needs a wrong guess or all-pass in the end
            if complete and not has_wrong and has_right:
                return False
            return True
        # must win: wrong guesses are forbidden outright, and once complete
        # someone must have guessed
        if has_wrong:
            return False
        if complete and not has_right:
            return False
        return True

    def backtrack(cell: int) -> None:
        if cell == n * width:
            rows = tuple(
                tuple(values[i * width : (i + 1) * width]) for i in range(n)
            )
            out.append(DecisionMatrix(rows))  # type: ignore[arg-type]
            return
        for v in (GUESS_BLACK, PASS, GUESS_WHITE):
            values[cell] = v
            if all(config_ok(code) for code in touching[cell]):
                backtrack(cell + 1)
        values[cell] = None

    backtrack(0)
    return out


# ---------------------------------------------------------------------------
# Player-permutation symmetry
# ---------------------------------------------------------------------------


def permute_config(code: int, n: int, perm: tuple[int, ...]) -> int:
    """Relabel hat bits: player perm[i] in the image wears player i's hat
    (0-based permutation)."""
    out = 0
    for i in range(n):
        bit = (code >> (n - 1 - i)) & 1
        out |= bit << (n - 1 - perm[i])
    return out


def permute_matrix(
    matrix: DecisionMatrix, perm: tuple[int, ...]
) -> DecisionMatrix:
    """Image of a strategy under a relabeling of the players.

    Player perm[i] of the image copies player i's behavior: on the score
    they see in the relabeled configuration, they take the decision player
    i took on the original.  Counterpart configurations agree on the
    copied cell, so the image is well defined.
    """
    n = matrix.n_players
    width = 1 << (n - 1)
    table = score_table(n)
    rows = [[None] * width for _ in range(n)]
    for code in range(1 << n):
        scores = table[code]
        image = permute_config(code, n, perm)
        image_scores = table[image]
        for i in range(n):
            rows[perm[i]][image_scores[perm[i]]] = matrix.rows[i][scores[i]]
    assert all(v is not None for row in rows for v in row)
    return DecisionMatrix(tuple(tuple(row) for row in rows))


def dedupe_player_permutation(
    matrices: list[DecisionMatrix], n: int
) -> list[DecisionMatrix]:
    """One representative per orbit under player relabeling.

    The representative is the lexicographically smallest matrix in the
    orbit (comparing row tuples, FREE sorting last); representatives are
    returned in order of first appearance of their orbit in the input.
    """
    perms = list(itertools.permutations(range(n)))
    seen: set[tuple] = set()
    out: list[DecisionMatrix] = []
    for m in matrices:
        if m.n_players != n:
            raise ValueError("all matrices must have %d rows" % n)
        orbit = [permute_matrix(m, perm) for perm in perms]
        canon = min(o.rows for o in orbit)
        if canon not in seen:
            seen.add(canon)
            out.append(DecisionMatrix(canon))
    return out


# ---------------------------------------------------------------------------
# FREE-cell invariance
# ---------------------------------------------------------------------------

_EXHAUSTIVE_FREE_LIMIT = 12
_SAMPLED_FREE_TRIALS = 200


def free_invariance_check(matrix: DecisionMatrix, params: GameParams) -> bool:
    """Is the matrix value independent of how FREE cells are resolved?

    Exhaustive over all 3^k substitutions while k <= 12; for more FREE
    cells (never produced by the synthesizer at supported n, but possible
    for hand-built inputs) falls back to per-cell independent substitution
    plus seeded random joint samples.
    """
    cells = matrix.free_cells()
    if not cells:
        return True
    reference = evaluate_matrix(matrix.substitute_free(PASS), params)
    choices = (GUESS_BLACK, PASS, GUESS_WHITE)
    if len(cells) <= _EXHAUSTIVE_FREE_LIMIT:
        for combo in itertools.product(choices, repeat=len(cells)):
            fill = dict(zip(cells, combo))
            if evaluate_matrix(matrix.substitute_free(fill), params) != reference:
                return False
        return True
    for cell in cells:
        for v in choices:
            fill = {c: PASS for c in cells}
            fill[cell] = v
            if evaluate_matrix(matrix.substitute_free(fill), params) != reference:
                return False
    rng = random.Random(0)
    for _ in range(_SAMPLED_FREE_TRIALS):
        fill = {c: rng.choice(choices) for c in cells}
        if evaluate_matrix(matrix.substitute_free(fill), params) != reference:
            return False
    return True
