"""Matrix synthesis, brute force, constrained enumeration, symmetry."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as hst

from hatgame.adequate import AdequateSet, enumerate_adequate, set_probability
from hatgame.core import (
    FREE,
    GUESS_BLACK,
    GUESS_WHITE,
    PASS,
    DecisionMatrix,
    GameParams,
    evaluate_matrix,
    losing_configs,
)
from hatgame.strategy import (
    all_matrices_for_set,
    brute_force_optimal,
    dedupe_player_permutation,
    free_invariance_check,
    matrix_from_set,
    permute_config,
    permute_matrix,
)

HALF = Fraction(1, 2)
NINE_TENTHS = Fraction(9, 10)


# ---------------------------------------------------------------------------
# matrix_from_set fixtures
# ---------------------------------------------------------------------------


def test_three_player_matrices():
    expected = {
        (0, 7): "-1 0 0 1\n-1 0 0 1\n-1 0 0 1",
        (1, 6): "0 -1 1 0\n0 -1 1 0\n1 0 0 -1",
        (2, 5): "0 1 -1 0\n1 0 0 -1\n0 -1 1 0",
        (3, 4): "1 0 0 -1\n0 1 -1 0\n0 1 -1 0",
    }
    for elems, text in expected.items():
        assert matrix_from_set(AdequateSet(elems, 3)).to_text() == text


def test_two_player_matrices():
    expected = {
        (0, 1): "-1 -1\n* 0",
        (0, 2): "* 0\n-1 -1",
        (0, 3): "-1 1\n-1 1",
        (1, 2): "1 -1\n1 -1",
        (1, 3): "0 *\n1 1",
        (2, 3): "1 1\n0 *",
    }
    for elems, text in expected.items():
        assert matrix_from_set(AdequateSet(elems, 2)).to_text() == text


def test_four_player_matrix_without_conflicts():
    m = matrix_from_set(AdequateSet((1, 6, 10, 13), 4))
    assert m.to_text() == (
        "0 -1 1 0 0 1 -1 0\n"
        "0 -1 1 0 0 1 -1 0\n"
        "0 -1 1 0 1 0 0 -1\n"
        "1 0 0 -1 0 -1 1 0"
    )
    assert m.free_cells() == ()


def test_four_player_matrix_with_free_cells():
    m = matrix_from_set(AdequateSet((1, 6, 9, 14), 4))
    assert m.free_cells() == ((1, 1), (1, 6))
    assert m.rows[0] == (0, FREE, 0, 0, 0, 0, FREE, 0)


def test_four_player_asymmetric_first_matrix():
    m = matrix_from_set(AdequateSet((1, 3, 12, 14), 4))
    assert m.to_text() == (
        "0 -1 0 -1 1 0 1 0\n"
        "0 -1 0 -1 1 0 1 0\n"
        "0 * 0 0 0 0 * 0\n"
        "1 1 0 0 0 0 -1 -1"
    )


def test_four_player_symmetric_first_matrix():
    m = matrix_from_set(AdequateSet((0, 1, 14, 15), 4))
    assert m.to_text() == (
        "-1 -1 0 0 0 0 1 1\n"
        "-1 -1 0 0 0 0 1 1\n"
        "-1 -1 0 0 0 0 1 1\n"
        "* 0 0 0 0 0 0 *"
    )


def test_five_player_symmetric_first_matrix():
    m = matrix_from_set(AdequateSet((0, 1, 2, 15, 23, 27, 28), 5))
    row123 = (-1, -1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, -1)
    row45 = (FREE, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, -1, 0)
    assert m.rows == (row123, row123, row123, row45, row45)


def test_five_player_low_regime_first_matrix():
    m = matrix_from_set(AdequateSet((0, 7, 11, 19, 28, 29, 30), 5))
    row123 = (-1, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 1, 1, 1, 0)
    row45 = (-1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, FREE, -1)
    assert m.rows == (row123, row123, row123, row45, row45)


def test_five_player_high_regime_first_matrix():
    m = matrix_from_set(AdequateSet((1, 6, 14, 22, 24, 27, 29), 5))
    row12 = (0, -1, 0, 0, 0, 0, FREE, 0, 1, 0, 0, 1, 0, 1, -1, 0)
    row34 = (0, -1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, -1, 1, 0, -1)
    row5 = (1, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1, -1, 1, 1, 0)
    assert m.rows == (row12, row12, row34, row34, row5)


# ---------------------------------------------------------------------------
# Generator soundness
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("p", [HALF, NINE_TENTHS, Fraction(11, 20)])
@pytest.mark.parametrize("n,size", [(2, 2), (3, 2), (4, 4)])
def test_generated_matrix_value_identity(n, size, p):
    params = GameParams(n, p)
    for aset in enumerate_adequate(n, size):
        m = matrix_from_set(aset)
        assert evaluate_matrix(m, params) == 1 - set_probability(aset, params)


def test_losing_configs_equal_the_set_for_free_less_matrices():
    for n, size in [(3, 2), (3, 3), (4, 4)]:
        for aset in enumerate_adequate(n, size):
            m = matrix_from_set(aset)
            if m.free_cells():
                continue
            assert losing_configs(m) == aset.elements


# ---------------------------------------------------------------------------
# Brute force
# ---------------------------------------------------------------------------


def test_brute_force_two_players_symmetric():
    best, matrices = brute_force_optimal(2, GameParams(2, HALF))
    assert best == HALF
    assert len(matrices) == 30
    assert len(dedupe_player_permutation(matrices, 2)) == 17


def test_brute_force_three_players_symmetric():
    best, matrices = brute_force_optimal(3, GameParams(3, HALF))
    assert best == Fraction(3, 4)
    expected = [
        matrix_from_set(AdequateSet(elems, 3))
        for elems in [(0, 7), (1, 6), (2, 5), (3, 4)]
    ]
    assert matrices == expected


def test_brute_force_three_players_asymmetric():
    best, matrices = brute_force_optimal(3, GameParams(3, NINE_TENTHS))
    assert best == Fraction(91, 100)
    expected = {
        matrix_from_set(AdequateSet(elems, 3)).rows
        for elems in [(1, 6), (2, 5), (3, 4)]
    }
    assert {m.rows for m in matrices} == expected


def test_brute_force_rejects_larger_games():
    with pytest.raises(ValueError):
        brute_force_optimal(4, GameParams(4, HALF))


def test_brute_force_agrees_with_cover_optimum():
    from hatgame.adequate import optimal_sets

    for n in (2, 3):
        for p in (HALF, NINE_TENTHS, Fraction(3, 5)):
            params = GameParams(n, p)
            best, _ = brute_force_optimal(n, params)
            _, min_sum = optimal_sets(n, params, 2)
            assert best == 1 - min_sum


# ---------------------------------------------------------------------------
# All matrices for a set
# ---------------------------------------------------------------------------


def test_all_matrices_two_player_counts():
    counts = {
        a.elements: len(all_matrices_for_set(a)) for a in enumerate_adequate(2, 2)
    }
    assert counts == {
        (0, 1): 3,
        (0, 2): 3,
        (0, 3): 9,
        (1, 2): 9,
        (1, 3): 3,
        (2, 3): 3,
    }
    assert sum(counts.values()) == 30


def test_all_matrices_union_equals_brute_force():
    everything = []
    for a in enumerate_adequate(2, 2):
        everything.extend(all_matrices_for_set(a))
    _, brute = brute_force_optimal(2, GameParams(2, HALF))
    assert sorted(m.rows for m in everything) == sorted(m.rows for m in brute)


def test_all_matrices_exact_win_set():
    for a in enumerate_adequate(2, 2):
        for m in all_matrices_for_set(a):
            assert losing_configs(m) == a.elements


def test_all_matrices_three_players_unique():
    for a in enumerate_adequate(3, 2):
        ms = all_matrices_for_set(a)
        assert len(ms) == 1
        assert ms[0] == matrix_from_set(a)


# ---------------------------------------------------------------------------
# Player-permutation symmetry
# ---------------------------------------------------------------------------


def test_permute_config():
    # swap players 1 and 2 of a 3-player configuration
    assert permute_config(0b100, 3, (1, 0, 2)) == 0b010
    assert permute_config(0b101, 3, (1, 0, 2)) == 0b011
    assert permute_config(0b101, 3, (0, 1, 2)) == 0b101


@given(data=hst.data())
@settings(max_examples=100)
def test_permutation_preserves_value(data):
    n = data.draw(hst.integers(min_value=2, max_value=3))
    width = 1 << (n - 1)
    rows = tuple(
        tuple(
            data.draw(hst.sampled_from((GUESS_BLACK, PASS, GUESS_WHITE)))
            for _ in range(width)
        )
        for _ in range(n)
    )
    m = DecisionMatrix(rows)
    perm = tuple(data.draw(hst.permutations(range(n))))
    p = data.draw(hst.sampled_from((HALF, NINE_TENTHS, Fraction(1, 3))))
    params = GameParams(n, p)
    assert evaluate_matrix(permute_matrix(m, perm), params) == evaluate_matrix(
        m, params
    )


def test_permutation_action_is_compatible_with_sets():
    # relabeling players permutes the loss set accordingly
    perm = (2, 0, 1)
    aset = AdequateSet((1, 6), 3)
    m = matrix_from_set(aset)
    image = permute_matrix(m, perm)
    expected_losses = tuple(
        sorted(permute_config(c, 3, perm) for c in aset.elements)
    )
    assert losing_configs(image) == expected_losses


def test_dedupe_single_matrix():
    m = matrix_from_set(AdequateSet((0, 7), 3))
    assert dedupe_player_permutation([m], 3) == [m]


def test_dedupe_table_of_four():
    mats = [
        matrix_from_set(AdequateSet(e, 3))
        for e in [(0, 7), (1, 6), (2, 5), (3, 4)]
    ]
    # {0,7} is fixed by relabeling; the other three form one orbit
    assert len(dedupe_player_permutation(mats, 3)) == 2


# ---------------------------------------------------------------------------
# FREE-cell invariance
# ---------------------------------------------------------------------------


def test_free_invariance_on_generated_matrices():
    params = GameParams(4, NINE_TENTHS)
    m = matrix_from_set(AdequateSet((1, 6, 9, 14), 4))
    assert free_invariance_check(m, params)
    assert free_invariance_check(
        matrix_from_set(AdequateSet((0, 7), 3)), GameParams(3, HALF)
    )


def test_free_invariance_counterexample():
    # a FREE whose resolution changes the value: guessing white on score 0
    # wins configuration 00, passing loses it
    bad = DecisionMatrix(((FREE, PASS), (PASS, PASS)))
    assert not free_invariance_check(bad, GameParams(2, HALF))


def test_free_invariance_all_generated_minimum_sets():
    for n, size, p in [(2, 2, NINE_TENTHS), (3, 2, HALF), (4, 4, NINE_TENTHS)]:
        params = GameParams(n, p)
        for aset in enumerate_adequate(n, size):
            assert free_invariance_check(matrix_from_set(aset), params)
