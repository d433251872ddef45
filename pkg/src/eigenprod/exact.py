"""Exact rational special values.

Everything in this module is computed in exact arithmetic
(``fractions.Fraction`` over Python integers): Bernoulli numbers,
Kronecker symbols, generalized Bernoulli numbers attached to quadratic
characters, and the negative special values of Riemann and Dedekind zeta
functions built from them.  No floating point enters at any stage, so
equalities between these values are decidable and are used as such by the
verification layer.

Conventions:

* ``bernoulli(1) == -1/2`` (the "first" convention), so that
  ``zeta(1-k) == -bernoulli(k)/k`` holds for every integer ``k >= 2``.
* ``L(1-k, chi) == -generalized_bernoulli(k, chi)/k`` for ``k >= 1``.
* Discriminants passed to character or field constructors must be
  fundamental; this is validated, not assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# Bernoulli numbers


@lru_cache(maxsize=None)
def _bernoulli_row(n: int) -> tuple[Fraction, ...]:
    # B_0..B_n via the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0.
    row: list[Fraction] = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * row[j]
        row.append(-acc / (m + 1))
    return tuple(row)


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, B_1 = -1/2."""
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if k > 2 and k % 2 == 1:
        return Fraction(0)
    return _bernoulli_row(k)[k]


# ---------------------------------------------------------------------------
# Kronecker symbol and quadratic characters


def kronecker(delta: int, n: int) -> int:
    """Kronecker symbol (delta / n), extended to all integers n."""
    a, b = delta, n
    if b == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if b < 0:
        b = -b
        if a < 0:
            result = -result
    if b % 2 == 0:
        if a % 2 == 0:
            return 0
        # (a/2) = 0, +-1 by a mod 8
        twos = 0
        while b % 2 == 0:
            b //= 2
            twos += 1
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # b odd and positive now: Jacobi symbol with reciprocity
    a %= b
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


def _squarefree(n: int) -> bool:
    n = abs(n)
    if n % 4 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 2
    return True


def is_fundamental_discriminant(delta: int) -> bool:
    """True iff delta is the discriminant of a quadratic field (or 1)."""
    if delta == 1:
        return True
    if delta % 4 == 1:
        return _squarefree(delta)
    if delta % 4 == 0:
        q = delta // 4
        return q % 4 in (2, 3) and _squarefree(q)
    return False


@dataclass(frozen=True)
class KroneckerCharacter:
    """The quadratic character chi(n) = (discriminant / n).

    Periodic modulo ``period == abs(discriminant)``; primitive exactly when
    the discriminant is fundamental, which the constructor enforces.
    """

    discriminant: int
    period: int

    def __init__(self, discriminant: int):
        if not is_fundamental_discriminant(discriminant) or discriminant == 1:
            raise ValueError(
                f"{discriminant} is not a fundamental discriminant"
            )
        object.__setattr__(self, "discriminant", discriminant)
        object.__setattr__(self, "period", abs(discriminant))

    def __call__(self, n: int) -> int:
        return kronecker(self.discriminant, n)

    def is_odd(self) -> bool:
        # chi(-1) = -1 exactly for imaginary discriminants
        return self.discriminant < 0

    @lru_cache(maxsize=None)
    def value_table(self) -> tuple[int, ...]:
        """chi(0), ..., chi(period - 1), computed once."""
        return tuple(self(a) for a in range(self.period))


# ---------------------------------------------------------------------------
# Generalized Bernoulli numbers and L-values


def generalized_bernoulli(k: int, chi: KroneckerCharacter) -> Fraction:
    """B_{k, chi} for the quadratic character chi.

    Expanding the Bernoulli polynomial in f^(k-1) * sum_a chi(a) B_k(a/f)
    and swapping sums gives

        B_{k, chi} = sum_{j=0}^{k} C(k, j) * B_j * f^(j-1) * S_{k-j},

    with integer power sums S_i = sum_{a=1}^{f} chi(a) a^i.  Only the
    power-sum loop touches the modulus, so the cost is O(f * k) integer
    operations.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    f = chi.period
    table = chi.value_table()
    power_sums = [0] * (k + 1)
    for a in range(1, f + 1):
        c = table[a % f]
        if c == 0:
            continue
        p = 1
        power_sums[0] += c
        for i in range(1, k + 1):
            p *= a
            power_sums[i] += c * p
    bern = _bernoulli_row(k)
    total = Fraction(0)
    for j in range(k + 1):
        if bern[j] == 0:
            continue
        total += math.comb(k, j) * bern[j] * Fraction(f) ** (j - 1) * power_sums[k - j]
    return total


def dirichlet_l_neg(k: int, chi: KroneckerCharacter) -> Fraction:
    """L(1 - k, chi) = -B_{k, chi} / k for k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return -generalized_bernoulli(k, chi) / k


def riemann_zeta_neg(k: int) -> Fraction:
    """zeta(1 - k) = -B_k / k for even k >= 2."""
    if k < 2 or k % 2 != 0:
        raise ValueError("k must be even and >= 2")
    return -bernoulli(k) / k


@lru_cache(maxsize=None)
def dedekind_zeta_neg(D: int, k: int) -> Fraction:
    """zeta_F(1 - k) for F the real quadratic field of discriminant D.

    Factors as zeta(1 - k) * L(1 - k, chi_D); k must be even and >= 2 (odd
    k give 0 and are rejected as misuse), D must be a fundamental
    discriminant > 1.
    """
    if D <= 1 or not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a real quadratic fundamental discriminant")
    if k < 2 or k % 2 != 0:
        raise ValueError("k must be even and >= 2")
    return riemann_zeta_neg(k) * dirichlet_l_neg(k, KroneckerCharacter(D))


def _sigma1(n: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            q = n // d
            if q != d:
                total += q
        d += 1
    return total


def zagier_zeta_minus_one(D: int) -> Fraction:
    """zeta_F(-1) as the finite divisor sum

        (1/60) * sum_{b^2 < D, b^2 == D mod 4} sigma_1((D - b^2) / 4),

    b running over all integers (negative b included).  An independent
    route to dedekind_zeta_neg(D, 2); the two are compared exactly in the
    verification layer.
    """
    if D <= 1 or not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a real quadratic fundamental discriminant")
    total = 0
    b = D % 2
    while b * b < D:
        term = _sigma1((D - b * b) // 4)
        total += term if b == 0 else 2 * term
        b += 2
    return Fraction(total, 60)
