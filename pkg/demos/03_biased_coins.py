"""Biased hats: which configurations should the team sacrifice?

With white probability p != 1/2 the loss sets stop being interchangeable:
a set's cost is sum_j c_j p^j q^(n-j) where c_j counts its elements with j
white hats.  This demo reproduces the optimal choices at p = 9/10 and
synthesizes the corresponding decision matrices.

Run:  python demos/03_biased_coins.py
"""

from collections import Counter
from fractions import Fraction

from hatgame import (
    GameParams,
    enumerate_adequate,
    evaluate_matrix,
    free_invariance_check,
    matrix_from_set,
    min_cover_optimize,
    optimal_sets,
    set_probability,
    signature,
)

p = Fraction(9, 10)

print("Three players, p = 9/10: cost of each pair")
params = GameParams(3, p)
for aset in enumerate_adequate(3, 2):
    print(
        "  %s  zero-count histogram %s  cost %s"
        % (aset.elements, signature(aset).compact(), set_probability(aset, params))
    )
print("The all-same pair {0,7} costs p^3 + q^3 = 0.73 and is out; the")
print("three mixed pairs cost pq = 0.09 each. Win probability: 0.91.")
print()

print("Four players, p = 9/10: 40 minimum-size sets in four cost classes")
params4 = GameParams(4, p)
histogram = Counter(
    set_probability(a, params4) for a in enumerate_adequate(4, 4)
)
for value, count in sorted(histogram.items()):
    print("  cost %-8s x %d" % (value, count))
print()

print("The best four-player set and its decision matrix:")
sets4, best4 = optimal_sets(4, params4, 4)
first = sets4[0]
matrix = matrix_from_set(first)
print("  loss set", first.elements, "cost", best4)
print(matrix.to_text())
print("  '*' cells are provably free:", free_invariance_check(matrix, params4))
print("  win probability:", evaluate_matrix(matrix, params4))
print()

print("Five players, p = 9/10: global optimum over ALL set sizes")
aset5, value5 = min_cover_optimize(5, GameParams(5, p))
print("  optimal loss set:", aset5.elements)
print("  class %s, cost %s" % (signature(aset5).compact(), value5))
print("  win probability: %s = 1 - %s" % (1 - value5, value5))
print()
m5 = matrix_from_set(aset5)
print(m5.to_text())
print()
print("Note the structure: players 1-2 share a strategy, 3-4 share one,")
print("player 5 has their own.")
