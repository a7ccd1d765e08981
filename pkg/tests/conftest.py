import random
from pathlib import Path

import pytest

from nashrand.exact import IntMatrix
from nashrand.families import (
    Permutation,
    beta_game,
    constant_sum_beta,
    pad_game,
    permutation_game,
    prime_block_game,
)
from nashrand.games import Game

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parent / "data"

# Distributions of the two showcase 8x8 games, frozen from the closed forms.
X1_NUMERATORS = (6, 2, 3, 1, 4, 5, 4, 9)
Y2_NUMERATORS = (9, 4, 5, 4, 1, 3, 2, 6)

EXAMPLE1_B_ROWS = (
    (0, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 0),
    (0, 1, 0, 1, 1, 0, 0, 0),
    (0, 0, 1, 0, 1, 1, 0, 0),
    (0, 0, 0, 1, 0, 1, 1, 0),
    (0, 0, 0, 0, 1, 0, 1, 1),
    (0, 0, 0, 0, 0, 1, 0, 1),
    (1, 0, 0, 0, 0, 0, 0, 0),
)


def coordination_game() -> Game:
    return Game(IntMatrix.identity(2), IntMatrix.identity(2))


def matching_pennies() -> Game:
    return Game(IntMatrix.identity(2), IntMatrix([[0, 1], [1, 0]]))


def asymmetric_2x2() -> Game:
    return Game(IntMatrix([[3, 0], [0, 2]]), IntMatrix([[0, 1], [2, 0]]))


@pytest.fixture(scope="session")
def corpus() -> dict[str, Game]:
    """Solvable games (n <= 10) exercised across the acceptance suite.

    Support enumeration results are cached inside the library, so repeated
    solves of these games across tests cost one enumeration each.
    """
    games: dict[str, Game] = {
        "example1": beta_game(8),
        "example2": constant_sum_beta(8)[0],
        "beta9": beta_game(9),
        "beta10": beta_game(10),
        "primeblock1": prime_block_game(1),
        "primeblock2": prime_block_game(2),
        "coordination": coordination_game(),
        "matching_pennies": matching_pennies(),
        "asymmetric_2x2": asymmetric_2x2(),
        "padded_example1": pad_game(beta_game(8)),
        "permutation_2_2": permutation_game(
            Permutation.identity(4), Permutation.from_cycles(4, [(1, 2), (3, 4)])
        )[0],
    }
    return games


def random_binary_matrix(rng: random.Random, n: int) -> IntMatrix:
    return IntMatrix([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)])


def random_int_matrix(rng: random.Random, n: int, lo: int, hi: int) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
