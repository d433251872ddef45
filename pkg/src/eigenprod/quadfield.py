"""Real and imaginary quadratic field invariants, exactly.

Class numbers are computed by counting reduced binary quadratic forms
(imaginary case) or cycles of reduced indefinite forms under the rho
operation (narrow class number, real case); fundamental unit norms come
from the parity of the continued-fraction period.  Everything is integer
arithmetic on exact inequalities, no floating point.

The verification layer only ever runs over real quadratic fields of
narrow class number one; ``narrow_one_fields`` enumerates those up to a
discriminant bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .exact import is_fundamental_discriminant
from .interval import (
    CertifiedReal,
    enclose_log,
    enclose_pi,
    enclose_sqrt,
    from_rational,
)


class Splitting(Enum):
    INERT = "Inert"
    SPLIT = "Split"
    RAMIFIED = "Ramified"


def _require_real_fundamental(D: int) -> None:
    if D <= 1 or not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a real quadratic fundamental discriminant")


def _to_discriminant(n: int) -> int:
    # accept either a fundamental discriminant or a squarefree radicand
    if n > 1 and is_fundamental_discriminant(n):
        return n
    if n > 1 and n % 4 in (2, 3) and is_fundamental_discriminant(4 * n):
        return 4 * n
    raise ValueError(f"{n} determines no real quadratic field")


def radicand(D: int) -> int:
    _require_real_fundamental(D)
    return D if D % 2 == 1 else D // 4


def splitting_of_two(D: int) -> Splitting:
    """Behaviour of the rational prime 2 in the field of discriminant D."""
    _require_real_fundamental(D)
    if D % 2 == 0:
        return Splitting.RAMIFIED
    return Splitting.INERT if D % 8 == 5 else Splitting.SPLIT


# ---------------------------------------------------------------------------
# Imaginary quadratic class numbers


def class_number_imaginary(delta: int) -> int:
    """h(delta) for a fundamental discriminant delta < 0.

    Counts reduced positive definite forms (a, b, c) of discriminant
    delta: |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    if delta >= 0 or not is_fundamental_discriminant(delta):
        raise ValueError(f"{delta} is not an imaginary fundamental discriminant")
    n = -delta
    count = 0
    b = n % 2
    while 3 * b * b <= n:
        m = (b * b + n) // 4
        a = max(b, 1)
        while a * a <= m:
            if m % a == 0:
                # c = m // a >= a is automatic here
                if b == 0 or a == b or a * a == m:
                    count += 1
                else:
                    count += 2
            a += 1
        b += 2
    return count


def ramare_bound(delta: int, precision: int = 128) -> CertifiedReal:
    """Certified upper bound for h(delta), delta < -4 fundamental:

        h(delta) <= (|delta|^(1/2) / pi) * (log|delta| / 2 + 5/2 - log 6),

    from the optima of L(1, chi) upper bounds.  Used as an analytic
    cross-check on the form-counting routine.
    """
    if delta >= -4 or not is_fundamental_discriminant(delta):
        raise ValueError("requires a fundamental discriminant below -4")
    n = from_rational(-delta, precision)
    log_n = enclose_log(n, precision)
    log6 = enclose_log(from_rational(6, precision), precision)
    half = from_rational(Fraction(1, 2), precision)
    five_half = from_rational(Fraction(5, 2), precision)
    factor = log_n * half + five_half - log6
    return enclose_sqrt(n, precision) / enclose_pi(precision) * factor


# ---------------------------------------------------------------------------
# Narrow class numbers of real quadratic fields
#
# Reduced indefinite form (a, b, c), b^2 - 4ac = D:
#     0 < b < sqrt(D)  and  sqrt(D) - b < 2|a| < sqrt(D) + b,
# all tested by integer squaring.  The rho operation permutes the reduced
# forms; the number of cycles is the narrow class number.


def _reduced_indefinite_forms(D: int) -> list[tuple[int, int, int]]:
    s = math.isqrt(D)
    forms = []
    for b in range(1, s + 1):
        if (D - b) % 2 != 0:
            continue
        m = D - b * b  # = -4ac > 0
        # |a| window from (sqrt(D)-b)/2 < |a| < (sqrt(D)+b)/2; start one
        # low and end one high, the exact squaring tests reject overshoot
        for abs_a in range(max(1, (s - b) // 2), (s + b) // 2 + 2):
            t = 2 * abs_a + b
            if t * t <= D:  # need 2|a| + b > sqrt(D)
                continue
            u = 2 * abs_a - b
            if u > 0 and u * u >= D:  # need 2|a| - b < sqrt(D)
                continue
            if m % (4 * abs_a) != 0:
                continue
            c_abs = m // (4 * abs_a)
            forms.append((abs_a, b, -c_abs))
            forms.append((-abs_a, b, c_abs))
    return forms


def _rho(form: tuple[int, int, int], D: int, s: int) -> tuple[int, int, int]:
    _, b, c = form
    m = 2 * abs(c)
    r0 = (-b) % m
    # largest r = r0 (mod m) with r <= isqrt(D); then r > sqrt(D) - m
    r = r0 + ((s - r0) // m) * m
    return (c, r, (r * r - D) // (4 * c))


@lru_cache(maxsize=None)
def narrow_class_number(D: int) -> int:
    """h+(D): cycles of reduced indefinite forms under rho."""
    _require_real_fundamental(D)
    s = math.isqrt(D)
    forms = _reduced_indefinite_forms(D)
    remaining = set(forms)
    cycles = 0
    while remaining:
        start = next(iter(remaining))
        cycles += 1
        f = start
        for _ in range(len(forms) + 1):
            remaining.discard(f)
            f = _rho(f, D, s)
            if f == start:
                break
        else:
            raise ArithmeticError(f"rho walk failed to close for D={D}")
    return cycles


def fundamental_unit_norm(n: int) -> int:
    """Norm (+1 or -1) of the fundamental unit; -1 iff the continued
    fraction of the standard generator has odd period.

    Accepts a fundamental discriminant or a squarefree radicand.
    """
    D = _to_discriminant(n)
    d = radicand(D)
    s = math.isqrt(d)

    def step(P: int, Q: int) -> tuple[int, int]:
        a = (P + s) // Q
        P2 = a * Q - P
        return P2, (d - P2 * P2) // Q

    state = (1, 2) if d % 4 == 1 else (0, 1)
    first = step(*state)
    cur = first
    period = 0
    while True:
        cur = step(*cur)
        period += 1
        if cur == first:
            break
    return -1 if period % 2 == 1 else 1


@dataclass(frozen=True)
class FieldDescriptor:
    """A real quadratic field pinned by its fundamental discriminant."""

    discriminant: int
    radicand: int
    two_splitting: Splitting
    narrow_class_number: int


def field_descriptor(D: int) -> FieldDescriptor:
    _require_real_fundamental(D)
    return FieldDescriptor(D, radicand(D), splitting_of_two(D), narrow_class_number(D))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def narrow_one_fields(limit: int) -> tuple[FieldDescriptor, ...]:
    """All real quadratic fields with narrow class number one and
    discriminant <= limit, ascending.

    Genus theory prefilter: h+ is odd only when the discriminant has a
    single prime divisor, so D = 8 or D a prime congruent to 1 mod 4;
    the exact cycle count then decides.
    """
    out = []
    for D in range(5, limit + 1):
        if D != 8 and not (D % 4 == 1 and _is_prime(D)):
            continue
        if narrow_class_number(D) == 1:
            out.append(field_descriptor(D))
    return tuple(out)
