"""Game families with closed-form equilibria and their supporting sequences.

Two constructions carry the heavy lifting:

* ``prime_block_game`` glues circulant-complement blocks sized by the first
  primes into one bordered imitation game.  Its unique equilibrium forces
  the row player's denominator to the product of those primes (times a
  small integer factor), while the column player just mixes uniformly.

* ``beta_game`` is a bordered banded binary matrix whose equilibrium
  coordinates are driven by a pair of order-4 integer recurrences; the
  equilibrium denominator grows geometrically with the dimension, with
  occasional dips where consecutive recurrence values share a gcd.

Both therefore exhibit an extreme randomness asymmetry between the two
players.  A permutation-symmetry transform turns either family into a
constant-sum game in which *both* players need the large denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import HasPureNE, HypothesisViolation, SymmetryViolation, UnsupportedDimension
from .exact import IntMatrix, cofactor_sum, det
from .games import Game, MixedStrategy, Profile, canonicalize, complexity, uniform

# ---------------------------------------------------------------------------
# primes

_PRIMES: list[int] = [2, 3, 5, 7, 11, 13]


def first_primes(count: int) -> list[int]:
    """First ``count`` primes, extending a cached incremental sieve."""
    while len(_PRIMES) < count:
        candidate = _PRIMES[-1] + 2
        while True:
            if all(candidate % p for p in _PRIMES if p * p <= candidate):
                _PRIMES.append(candidate)
                break
            candidate += 2
    return _PRIMES[:count]


# ---------------------------------------------------------------------------
# the linear recurrences


@dataclass(frozen=True)
class RecurrenceTable:
    """Exact values of the coupled order-4 recurrences.

    a starts (1, 1, 1, 0) and b starts (0, 1, 0, 1); both continue with
    s(n) = s(n-2) - s(n-3) + s(n-4).  det_b tracks the determinant sequence
    of the banded matrices (base 1, 1, 2; then d(n) = d(n-1) + d(n-3)), and
    g(n) = gcd(b(n), b(n+1)) is the divisor that occasionally shrinks the
    equilibrium denominator.
    """

    upto: int
    a_values: tuple[int, ...]      # a_1 .. a_upto
    b_values: tuple[int, ...]      # b_1 .. b_{upto+1}
    det_b_values: tuple[int, ...]  # det B_1 .. det B_upto
    g_values: tuple[int, ...]      # g_1 .. g_upto

    def a(self, n: int) -> int:
        return self.a_values[n - 1]

    def b(self, n: int) -> int:
        return self.b_values[n - 1]

    def det_b(self, n: int) -> int:
        return self.det_b_values[n - 1]

    def g(self, n: int) -> int:
        return self.g_values[n - 1]


def recurrence_table(upto: int) -> RecurrenceTable:
    if upto < 4:
        raise UnsupportedDimension("table needs upto >= 4")
    a = [1, 1, 1, 0]
    b = [0, 1, 0, 1]
    for n in range(5, upto + 2):
        b.append(b[n - 3] - b[n - 4] + b[n - 5])
    for n in range(5, upto + 1):
        a.append(a[n - 3] - a[n - 4] + a[n - 5])
    det_b = [1, 1, 2]
    for n in range(4, upto + 1):
        det_b.append(det_b[n - 2] + det_b[n - 4])
    g = [math.gcd(b[i], b[i + 1]) for i in range(upto)]
    table = RecurrenceTable(upto, tuple(a), tuple(b[: upto + 1]), tuple(det_b), tuple(g))
    _check_table(table)
    return table


def _check_table(t: RecurrenceTable) -> None:
    for n in range(1, t.upto + 1):
        if t.b(n) + t.b(n + 1) != t.a(n):
            raise AssertionError(f"b({n}) + b({n + 1}) != a({n})")
        if n >= 4 and (1 if t.b(n) > 0 else -1) != (-1) ** n:
            raise AssertionError(f"sign of b({n}) is wrong")


@dataclass(frozen=True)
class RecurrenceConstants:
    """Floating-point roots and weights of the recurrence's characteristic
    polynomial x^3 + x^2 + 1 (plus the root 1 split off from x^4 - x^2 + x - 1).

    Everything exact goes through RecurrenceTable; these constants appear
    only in tolerance-based asymptotic checks.
    """

    rho: float
    z: complex
    w0: float
    w1: float
    w2: complex

    @property
    def growth_rate_bits(self) -> float:
        """log2 |rho|, the geometric growth rate of the sequences in bits."""
        return math.log2(-self.rho)


def recurrence_constants() -> RecurrenceConstants:
    """Machine-precision constants, Newton-polished from 4-digit seeds."""
    rho = -1.4656
    for _ in range(8):
        rho -= (rho**3 + rho**2 + 1) / (3 * rho**2 + 2 * rho)
    # remaining quadratic factor x^2 + (1 + rho) x + (rho^2 + rho)
    half = -(1 + rho) / 2
    imag = math.sqrt((rho**2 + rho) - half * half)
    z = complex(half, -imag)
    # weights fitting b_n = w0 + w1 rho^n + 2 Re(w2 z^n) to b_1..b_4
    w0, w1, w2 = _fit_weights(rho, z)
    return RecurrenceConstants(rho=rho, z=z, w0=w0, w1=w1, w2=w2)


def _fit_weights(rho: float, z: complex) -> tuple[float, float, complex]:
    targets = [0.0, 1.0, 0.0, 1.0]
    # unknowns: w0, w1, Re w2, Im w2
    rows = []
    for n in range(1, 5):
        zn = z**n
        rows.append([1.0, rho**n, 2 * zn.real, -2 * zn.imag, targets[n - 1]])
    m = 4
    for c in range(m):
        pivot = max(range(c, m), key=lambda r: abs(rows[r][c]))
        rows[c], rows[pivot] = rows[pivot], rows[c]
        for r in range(m):
            if r != c and rows[r][c] != 0.0:
                f = rows[r][c] / rows[c][c]
                for j in range(c, m + 1):
                    rows[r][j] -= f * rows[c][j]
    w = [rows[i][m] / rows[i][i] for i in range(m)]
    return w[0], w[1], complex(w[2], w[3])


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """Bijection on {1, ..., n} with its cycle decomposition cached.

    Applied to a vector v, the image w satisfies w_j = v_{pi(j)}.
    """

    __slots__ = ("mapping", "_cycles")

    def __init__(self, mapping: Sequence[int]):
        images = tuple(int(v) for v in mapping)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("mapping is not a bijection on 1..n")
        self.mapping = images
        self._cycles: tuple[tuple[int, ...], ...] | None = None

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(self.mapping)

    def __repr__(self) -> str:
        return f"Permutation({list(self.mapping)})"

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def forward_cycle(cls, n: int) -> "Permutation":
        """i -> i + 1 with wraparound."""
        return cls([i % n + 1 for i in range(1, n + 1)])

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        mapping = list(range(1, n + 1))
        for cycle in cycles:
            for pos, i in enumerate(cycle):
                mapping[i - 1] = cycle[(pos + 1) % len(cycle)]
        return cls(mapping)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.mapping, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(i) = self(other(i))."""
        return Permutation([self(other(i)) for i in range(1, self.n + 1)])

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        if self._cycles is None:
            seen = [False] * self.n
            out = []
            for start in range(1, self.n + 1):
                if seen[start - 1]:
                    continue
                cycle = []
                i = start
                while not seen[i - 1]:
                    seen[i - 1] = True
                    cycle.append(i)
                    i = self(i)
                out.append(tuple(cycle))
            self._cycles = tuple(out)
        return self._cycles

    def apply(self, vector: Sequence) -> tuple:
        """Vector image under this permutation: result_j = v_{pi(j)}."""
        if len(vector) != self.n:
            raise ValueError("vector length does not match permutation size")
        return tuple(vector[self(j) - 1] for j in range(1, self.n + 1))

    def matrix(self) -> IntMatrix:
        """Permutation matrix P with P e_i = e_{pi(i)}."""
        n = self.n
        return IntMatrix(
            [[1 if r + 1 == self(c + 1) else 0 for c in range(n)] for r in range(n)]
        )


# ---------------------------------------------------------------------------
# prime-block construction


def block_matrix(k: int) -> IntMatrix:
    """(k+1) x (k+1) binary matrix with zeros exactly where i = j+1 mod k+1."""
    if k < 1:
        raise UnsupportedDimension("block size parameter must be >= 1")
    m = k + 1
    return IntMatrix(
        [[0 if (i - j - 1) % m == 0 else 1 for j in range(m)] for i in range(m)]
    )


def _prime_block_payoffs(primes: Sequence[int]) -> IntMatrix:
    sizes = [p + 1 for p in primes]
    inner = sum(sizes)
    rows = [[0] * (inner + 1) for _ in range(inner + 1)]
    offset = 0
    for p in primes:
        blk = block_matrix(p).rows
        m = p + 1
        for i in range(m):
            for j in range(m):
                rows[offset + i][1 + offset + j] = blk[i][j]
        offset += m
    rows[inner][0] = 1
    return IntMatrix(rows)


def prime_block_game(num_primes: int) -> Game:
    """Imitation game over blocks sized by the first ``num_primes`` primes."""
    if num_primes < 1:
        raise UnsupportedDimension("need at least one prime block")
    primes = first_primes(num_primes)
    b = _prime_block_payoffs(primes)
    return Game(IntMatrix.identity(b.n), b, family_tag="primeblock")


def prime_block_ne(num_primes: int) -> tuple[Profile, int]:
    """Closed-form unique equilibrium of ``prime_block_game`` and its C_1.

    The column player mixes uniformly over all N strategies.  The row
    player puts weight 1/(p_k D) on every strategy of block k and the large
    weight 1/D on the bordered strategy N, where D = n + 1 + sum(1/p_k).
    The exact denominator is (n+1) * prod(p) + sum_k prod_{l != k}(p).
    """
    if num_primes < 1:
        raise UnsupportedDimension("need at least one prime block")
    primes = first_primes(num_primes)
    n = num_primes
    prod = math.prod(primes)
    c1 = (n + 1) * prod + sum(prod // p for p in primes)
    numerators: list[int] = []
    for p in primes:
        numerators.extend([prod // p] * (p + 1))
    numerators.append(prod)
    total = sum(numerators)
    assert total == c1
    x = MixedStrategy(tuple(numerators), total)
    profile = Profile(x, uniform(len(numerators)))
    return profile, c1


def prime_block_symmetry(num_primes: int) -> tuple[Permutation, Permutation]:
    """A verified (pi, tau) symmetry pair for the prime-block payoffs.

    pi is the forward shift cycle.  tau sends the border column to the
    border row and twists each block by two positions -- the pair under
    which column i of B equals the pi-permuted row tau(i).
    """
    primes = first_primes(num_primes)
    sizes = [p + 1 for p in primes]
    big_n = sum(sizes) + 1
    pi = Permutation.forward_cycle(big_n)
    tau = [0] * big_n
    tau[0] = big_n
    offset = 0
    for m in sizes:
        for c in range(1, m + 1):
            tau[offset + c] = offset + (c + 1) % m + 1
        offset += m
    return pi, Permutation(tau)


# ---------------------------------------------------------------------------
# banded recurrence construction


def banded_matrix(m: int) -> IntMatrix:
    """m x m binary matrix with ones on the diagonal, the superdiagonal,
    and the second subdiagonal."""
    if m < 1:
        raise UnsupportedDimension("banded matrix needs m >= 1")
    return IntMatrix(
        [
            [1 if j - i in (0, 1) or i - j == 2 else 0 for j in range(m)]
            for i in range(m)
        ]
    )


def beta_matrix(n: int) -> IntMatrix:
    """Bordered banded matrix: zero first column except a 1 in the last row,
    with the (n-1)-sized banded matrix in the upper right."""
    if n < 2:
        raise UnsupportedDimension("bordered banded matrix needs n >= 2")
    inner = banded_matrix(n - 1).rows
    rows = [(0,) + inner[i] for i in range(n - 1)]
    rows.append((1,) + (0,) * (n - 1))
    return IntMatrix(rows)


def beta_game(n: int) -> Game:
    """Imitation game against the bordered banded matrix."""
    return Game(IntMatrix.identity(n), beta_matrix(n), family_tag="beta")


def beta_ne(n: int) -> tuple[Profile, int]:
    """Closed-form unique equilibrium of ``beta_game(n)`` for n >= 8.

    The unnormalized coordinates come straight from the recurrences:
    x'_{n-1} = |b_n|, x'_{n-4} = |a_n|, x'_{n-k} = a_k |b_n| + b_k |a_n|
    for the remaining k < n, and x'_n = 2 |b_n| + |a_n|.  The canonical
    denominator equals |K(beta_n)| / gcd(b_n, b_{n+1}), which is asserted.
    """
    if n < 8:
        raise UnsupportedDimension("closed form restricted to n >= 8")
    t = recurrence_table(n)
    bn = abs(t.b(n))
    an = abs(t.a(n))
    coords = [0] * (n + 1)
    coords[n - 1] = bn
    coords[n - 4] = an
    for k in range(2, n):
        if k == 4:
            continue
        coords[n - k] = t.a(k) * bn + t.b(k) * an
    coords[n] = 2 * bn + an
    raw = coords[1:]
    if any(v <= 0 for v in raw):
        raise AssertionError("closed-form coordinates must be positive")
    total = sum(raw)
    x = canonicalize([Fraction(v, total) for v in raw])
    c1 = complexity(x)
    k_abs = abs(cofactor_sum(beta_matrix(n), method="solve"))
    if c1 * t.g(n) != k_abs:
        raise AssertionError("denominator disagrees with cofactor sum / gcd")
    return Profile(x, uniform(n)), c1


# ---------------------------------------------------------------------------
# transforms and special cases


def is_symmetric_under(b: IntMatrix, pi: Permutation, tau: Permutation) -> bool:
    """Whether column i of ``b`` equals the pi-permuted row tau(i) for all i."""
    n = b.n
    if pi.n != n or tau.n != n:
        return False
    rows = b.rows
    return all(
        rows[j][i] == rows[tau(i + 1) - 1][pi(j + 1) - 1]
        for i in range(n)
        for j in range(n)
    )


def constant_sum_transform(game: Game, pi: Permutation, tau: Permutation) -> Game:
    """Turn a symmetric imitation game (I, B) into the constant-sum (1-B, B).

    The transform preserves the unique fully mixed equilibrium strategy of
    the row player and hands its permuted copy to the column player, so both
    players end up needing the same (large) denominator.
    """
    n = game.n
    if game.A != IntMatrix.identity(n):
        raise HypothesisViolation("row player payoffs must be the identity")
    if not is_symmetric_under(game.B, pi, tau):
        raise SymmetryViolation("payoffs are not symmetric under (pi, tau)")
    d = det(game.B)
    if d == 0:
        raise HypothesisViolation("payoff matrix must be invertible")
    if cofactor_sum(game.B, method="solve") == d:
        raise HypothesisViolation("cofactor sum equals determinant")
    a_rows = [[1 - v for v in row] for row in game.B.rows]
    tag = f"constsum-{game.family_tag}" if game.family_tag else "constsum"
    return Game(IntMatrix(a_rows), game.B, family_tag=tag, constant_sum=1)


def constant_sum_beta(n: int) -> tuple[Game, Profile, int]:
    """Constant-sum version of ``beta_game`` with its equilibrium and C."""
    rev = Permutation.reversal(n)
    game = constant_sum_transform(beta_game(n), rev, rev)
    profile, c1 = beta_ne(n)
    y = MixedStrategy(rev.inverse().apply(profile.x.numerators), profile.x.denominator)
    return game, Profile(profile.x, y), c1


def constant_sum_prime_block(num_primes: int) -> tuple[Game, Profile, int]:
    """Constant-sum version of ``prime_block_game``."""
    pi, tau = prime_block_symmetry(num_primes)
    game = constant_sum_transform(prime_block_game(num_primes), pi, tau)
    profile, c1 = prime_block_ne(num_primes)
    y = MixedStrategy(pi.inverse().apply(profile.x.numerators), profile.x.denominator)
    return game, Profile(profile.x, y), c1


def pad_game(game: Game) -> Game:
    """Append one dummy strategy per player without changing the equilibria.

    The row player's dummy row earns 1 only against the dummy column; the
    column player's dummy column always earns 0.  Requires no all-zero
    column in A and no all-zero row in B, else the dummies could matter.
    """
    n = game.n
    a = game.A.rows
    b = game.B.rows
    for j in range(n):
        if all(a[i][j] == 0 for i in range(n)):
            raise HypothesisViolation(f"column {j + 1} of A is all zeros")
    for i in range(n):
        if all(v == 0 for v in b[i]):
            raise HypothesisViolation(f"row {i + 1} of B is all zeros")
    a_rows = [row + (1,) for row in a]
    a_rows.append((0,) * n + (1,))
    b_rows = [row + (0,) for row in b]
    b_rows.append((1,) * n + (0,))
    constant = game.constant_sum if game.constant_sum == 1 else None
    return Game(
        IntMatrix(a_rows),
        IntMatrix(b_rows),
        family_tag=game.family_tag,
        constant_sum=constant,
    )


def permutation_game(pi: Permutation, tau: Permutation) -> tuple[Game, int]:
    """Game of two permutation matrices and its common minimal complexity.

    Equilibria are uniform mixes over unions of cycles of pi^-1 tau (paired
    with the pi-image support for the row player), so both players' minimal
    complexity is the length of the shortest cycle.
    """
    if pi.n != tau.n:
        raise ValueError("permutations act on different sets")
    game = Game(pi.matrix(), tau.matrix(), family_tag="permutation")
    shortest = min(len(c) for c in pi.inverse().compose(tau).cycles())
    return game, shortest


def two_by_two_complexities(game: Game) -> tuple[int, int]:
    """Closed-form minimal complexities of a 2x2 game without pure equilibria.

    After orienting rows so A11 > A21, the unique equilibrium mixes with
    odds taken from payoff differences; reducing those fractions gives

        C_1 = (B12 - B11 + B21 - B22) / gcd(B12 - B11, B21 - B22)

    and symmetrically for C_2 from A.  Raises HasPureNE when a pure
    equilibrium exists (both complexities are 1 then).
    """
    from .solving import pure_nash

    if game.n != 2:
        raise UnsupportedDimension("closed form only covers 2x2 games")
    if pure_nash(game):
        raise HasPureNE()
    a = [list(r) for r in game.A.rows]
    b = [list(r) for r in game.B.rows]
    if a[0][0] < a[1][0]:
        a.reverse()
        b.reverse()
    assert a[0][0] > a[1][0], "orientation must be strict without pure NEs"
    c1 = (b[0][1] - b[0][0] + b[1][0] - b[1][1]) // math.gcd(
        b[0][1] - b[0][0], b[1][0] - b[1][1]
    )
    c2 = (a[0][0] - a[1][0] + a[1][1] - a[0][1]) // math.gcd(
        a[0][0] - a[1][0], a[1][1] - a[0][1]
    )
    return c1, c2


# ---------------------------------------------------------------------------
# asymptotics


@dataclass(frozen=True)
class AsymptoticReport:
    upto: int
    top_ratio: float               # b(upto+1) / b(upto)
    ratio_error: float             # |top_ratio - rho|
    sandwich_ok: bool              # ratios alternate around rho, distances shrink
    sandwich_checked_upto: int
    claim_one: float               # b_l - b_{l+1} b_{l-1} / b_l at l = upto - 1
    claim_one_target: float
    claim_two: float               # b_{l+2} - b_{l+1}^2 / b_l at l = upto - 1
    claim_two_target: float
    gcd_growth_rate: float         # (1/n) log2 max(g_n, 1) at n = upto
    gcd_envelope_violations: tuple[int, ...]


def asymptotic_checks(
    table: RecurrenceTable, consts: RecurrenceConstants
) -> AsymptoticReport:
    """Float spot checks of the limits the integer sequences approach.

    The gcd envelope gamma^n (gamma = sqrt(2) + 0.01) is known to fail on a
    sparse exceptional set; violating indices are reported, never hidden.
    """
    if table.upto < 40:
        raise UnsupportedDimension("asymptotic checks need a table up to >= 40")
    rho = consts.rho
    top = table.upto
    ratios = {n: table.b(n + 1) / table.b(n) for n in range(5, top + 1)}
    # Ratios with even index sit above rho, odd ones below, and from n = 7
    # the distances shrink strictly.  (They do not shrink from n = 5: the
    # ratios at 5 and 7 are both exactly -2.)  Monotonicity is only judged
    # while the distances stay above double-precision resolution.
    sandwich_ok = True
    checked = 5
    prev_dist = None
    for n in range(5, top + 1):
        dist = abs(ratios[n] - rho)
        if dist <= 1e-12:
            break
        side_ok = ratios[n] > rho if n % 2 == 0 else ratios[n] < rho
        if not side_ok:
            sandwich_ok = False
        if n >= 8 and prev_dist is not None and dist >= prev_dist:
            sandwich_ok = False
        prev_dist = dist
        checked = n
    l = top - 1
    claim_one = table.b(l) - Fraction(table.b(l + 1) * table.b(l - 1), table.b(l))
    claim_two = table.b(l + 2) - Fraction(table.b(l + 1) ** 2, table.b(l))
    gamma = math.sqrt(2) + 0.01
    violations = tuple(
        n for n in range(1, top + 1) if table.g(n) > gamma**n
    )
    g_top = max(table.g(top), 1)
    return AsymptoticReport(
        upto=top,
        top_ratio=ratios[top],
        ratio_error=abs(ratios[top] - rho),
        sandwich_ok=sandwich_ok,
        sandwich_checked_upto=checked,
        claim_one=float(claim_one),
        claim_one_target=-((rho - 1) ** 2) / (3 * rho),
        claim_two=float(claim_two),
        claim_two_target=((rho - 1) ** 2) / 3,
        gcd_growth_rate=math.log2(g_top) / top,
        gcd_envelope_violations=violations,
    )
