"""A first walk through the hat game: configurations, scores, strategies.

Three players get white (0) or black (1) hats.  Each sees the other two
hats, and everyone simultaneously guesses their own color or passes.  The
team wins if at least one guess is right and nobody guesses wrong.

Run:  python demos/01_scores_and_strategies.py
"""

from fractions import Fraction

from hatgame import (
    DecisionMatrix,
    GameParams,
    bits,
    config_probability,
    evaluate_matrix,
    flip,
    losing_configs,
    score_vector,
    wins,
)

n = 3
params = GameParams(n, Fraction(1, 2))

print("All %d configurations for %d players:" % (1 << n, n))
print("code  bits   scores        probability")
for code in range(1 << n):
    print(
        "%4d  %s  %s  %s"
        % (
            code,
            "".join(map(str, bits(code, n))),
            score_vector(code, n),
            config_probability(code, params),
        )
    )

print()
print("A player's score is what they see: the other hats read as a binary")
print("number. Flipping a player's own hat never changes their score:")
code = 0b100
for player in (1, 2, 3):
    other = flip(code, n, player)
    print(
        "  flip player %d: %s -> %s, scores %s -> %s"
        % (
            player,
            format(code, "03b"),
            format(other, "03b"),
            score_vector(code, n),
            score_vector(other, n),
        )
    )

print()
print("The classic three-player strategy: pass when the others' hats")
print("differ, guess the opposite color when they match.")
matrix = DecisionMatrix.from_text(
    """
    -1 0 0 1
    -1 0 0 1
    -1 0 0 1
    """
)
print(matrix.to_text())
print()
for code in range(1 << n):
    print(
        "  config %s: %s"
        % (format(code, "03b"), "win" if wins(matrix, code) else "LOSE")
    )
print("losing configurations:", losing_configs(matrix))
print("win probability at p=1/2:", evaluate_matrix(matrix, params))
print()
print("The team wins 3/4 of the time; it loses exactly on the two")
print("all-same-color configurations. Strategies are all about choosing")
print("WHICH configurations to sacrifice.")
