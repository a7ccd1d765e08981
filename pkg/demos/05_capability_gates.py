#!/usr/bin/env python3
"""Bounded-randomness play: when capability caps kill every equilibrium.

If players may only use distributions with denominator up to (c1, c2), the
restricted game has an equilibrium exactly when the unrestricted game has
one inside those caps.  The showcase game's thresholds are razor sharp.
Closed forms for 2x2 games and permutation games round out the picture.
"""

from nashrand import (
    HasPureNE,
    Game,
    IntMatrix,
    Permutation,
    beta_game,
    bounded_ne_exists,
    min_complexities,
    permutation_game,
    two_by_two_complexities,
)

game = beta_game(8)
print("imitation game, n = 8, unique NE with C = (34, 8)")
for c1, c2 in ((34, 8), (33, 8), (34, 7), (100, 100), (1, 1)):
    verdict = bounded_ne_exists(game, c1, c2)
    print(f"  caps (c1={c1:3d}, c2={c2:3d}): equilibrium exists = {verdict}")

print("\n2x2 closed forms (no pure equilibria):")
for a_rows, b_rows in (
    ([[1, 0], [0, 1]], [[0, 1], [1, 0]]),
    ([[3, 0], [0, 2]], [[0, 1], [2, 0]]),
):
    g = Game(IntMatrix(a_rows), IntMatrix(b_rows))
    c = two_by_two_complexities(g)
    print(f"  A={a_rows} B={b_rows} -> C = {c} (enumeration: {min_complexities(g)})")

print("\na game WITH pure equilibria short-circuits:")
try:
    two_by_two_complexities(Game(IntMatrix.identity(2), IntMatrix.identity(2)))
except HasPureNE as exc:
    print(f"  coordination game -> {exc} -> C = {exc.complexities}")

print("\npermutation games: complexity = shortest cycle of pi^-1 tau")
cases = [
    ("identity vs 5-cycle", Permutation.identity(5), Permutation.forward_cycle(5)),
    ("identity vs (1 2)(3 4)", Permutation.identity(4),
     Permutation.from_cycles(4, [(1, 2), (3, 4)])),
    ("3-cycle vs itself", Permutation.from_cycles(3, [(1, 2, 3)]),
     Permutation.from_cycles(3, [(1, 2, 3)])),
]
for label, pi, tau in cases:
    g, shortest = permutation_game(pi, tau)
    print(f"  {label}: min cycle length {shortest}, "
          f"enumeration gives {min_complexities(g)}")
