"""Certified interval arithmetic and the escalation loop.

Transcendental enclosures are checked for containment against mpmath at
300 bits of working precision.  Endpoint conversion to mpf rounds, so
containment is asserted with a guard band of 2^-250, many orders below
any enclosure width produced here.
"""

import random
from fractions import Fraction

import pytest
from mpmath import mp

from eigenprod import (
    PI,
    Abs,
    CertifiedReal,
    Decision,
    Exp,
    GammaInt,
    Log,
    Outcome,
    Pow,
    Rat,
    Sqrt,
    Zeta,
    certified_compare,
    enclose_exp,
    enclose_log,
    enclose_pi,
    enclose_sqrt,
    enclose_zeta,
    evaluate_with_escalation,
    gamma_integer,
)
from eigenprod.interval import from_rational, product

mp.prec = 300
GUARD = mp.mpf(2) ** -250


def _as_mp(x: Fraction):
    return mp.mpf(x.numerator) / mp.mpf(x.denominator)


def _contains(enc: CertifiedReal, value) -> bool:
    return _as_mp(enc.lo) - GUARD <= value <= _as_mp(enc.hi) + GUARD


# ---------------------------------------------------------------------------
# CertifiedReal


def test_interval_rejects_inverted_endpoints():
    with pytest.raises(ValueError, match="empty interval"):
        CertifiedReal(Fraction(2), Fraction(1), 32)


def test_interval_queries():
    x = CertifiedReal(Fraction(1, 3), Fraction(1, 2), 64)
    assert x.width() == Fraction(1, 6)
    assert x.contains(Fraction(2, 5))
    assert x.contains(Fraction(1, 3)) and x.contains(Fraction(1, 2))
    assert not x.contains(Fraction(3, 5))
    assert x.subset_of(0, 1)
    assert not x.subset_of(Fraction(2, 5), 1)


def test_from_rational_is_a_point():
    x = from_rational(Fraction(7, 3), 64)
    assert x.lo == x.hi == Fraction(7, 3)
    assert x.width() == 0


def test_arithmetic_preserves_containment():
    # random point values wrapped in random slack; every operation must
    # keep the exact rational result inside the interval
    rng = random.Random(577)

    def wrap(v: Fraction) -> CertifiedReal:
        a = Fraction(rng.randrange(0, 5), rng.randrange(1, 9) * 101)
        b = Fraction(rng.randrange(0, 5), rng.randrange(1, 9) * 103)
        return CertifiedReal(v - a, v + b, 64)

    for _ in range(400):
        x = Fraction(rng.randrange(-50, 50), rng.randrange(1, 30))
        y = Fraction(rng.randrange(-50, 50), rng.randrange(1, 30))
        X, Y = wrap(x), wrap(y)
        assert (X + Y).contains(x + y)
        assert (X - Y).contains(x - y)
        assert (X * Y).contains(x * y)
        assert (-X).contains(-x)
        assert X.abs().contains(abs(x))
        if not Y.contains(0):
            assert (X / Y).contains(x / y)
            assert Y.reciprocal().contains(1 / y)
        n = rng.randrange(0, 5)
        assert X.pow_int(n).contains(x**n)
        if not X.contains(0):
            m = -rng.randrange(1, 4)
            assert X.pow_int(m).contains(x**m)


def test_reciprocal_through_zero_rejected():
    x = CertifiedReal(Fraction(-1), Fraction(1), 32)
    with pytest.raises(ZeroDivisionError):
        x.reciprocal()


def test_pow_int_edge_cases():
    x = CertifiedReal(Fraction(-2), Fraction(3), 32)
    sq = x.pow_int(2)
    assert sq.lo == 0 and sq.hi == 9
    cube = x.pow_int(3)
    assert cube.lo == -8 and cube.hi == 27
    assert x.pow_int(0).lo == x.pow_int(0).hi == 1
    neg = CertifiedReal(Fraction(-3), Fraction(-2), 32)
    assert neg.pow_int(-2) == CertifiedReal(Fraction(1, 9), Fraction(1, 4), 32)


def test_abs_of_straddling_interval():
    x = CertifiedReal(Fraction(-3), Fraction(2), 32)
    assert x.abs() == CertifiedReal(Fraction(0), Fraction(3), 32)
    y = CertifiedReal(Fraction(-3), Fraction(-2), 32)
    assert y.abs() == CertifiedReal(Fraction(2), Fraction(3), 32)


# ---------------------------------------------------------------------------
# Constant enclosures


@pytest.mark.parametrize("precision", [16, 64, 128])
def test_enclose_pi_contains_pi(precision):
    enc = enclose_pi(precision)
    assert _contains(enc, mp.pi)
    assert enc.width() > 0
    assert enc.width() < Fraction(1, 2 ** (precision - 8))


@pytest.mark.parametrize("s", [2, 3, 4, 6, 8, 12, 16])
def test_enclose_zeta_contains_zeta(s):
    enc = enclose_zeta(s, 128)
    assert _contains(enc, mp.zeta(s))
    assert enc.width() < Fraction(1, 10**5)


def test_enclose_zeta_rejects_small_s():
    with pytest.raises(ValueError, match="s must be an integer >= 2"):
        enclose_zeta(1, 64)


def test_enclosures_are_cached():
    assert enclose_pi(64) is enclose_pi(64)
    assert enclose_zeta(4, 128) is enclose_zeta(4, 128)


def test_gamma_integer():
    assert gamma_integer(1) == 1
    assert gamma_integer(5) == 24
    assert gamma_integer(10) == 362880
    with pytest.raises(ValueError):
        gamma_integer(0)


@pytest.mark.parametrize("value", [Fraction(2), Fraction(1, 3), Fraction(99, 7)])
def test_enclose_sqrt_exp_log(value):
    x = from_rational(value, 96)
    v = _as_mp(value)
    assert _contains(enclose_sqrt(x), mp.sqrt(v))
    assert _contains(enclose_exp(x), mp.exp(v))
    assert _contains(enclose_log(x), mp.log(v))


def test_enclose_sqrt_rejects_negative():
    with pytest.raises(ValueError):
        enclose_sqrt(from_rational(Fraction(-1), 32))


def test_enclose_log_rejects_nonpositive():
    with pytest.raises(ValueError):
        enclose_log(from_rational(Fraction(0), 32))


# ---------------------------------------------------------------------------
# Expression trees


def test_expression_sugar_builds_correct_enclosures():
    expr = (Rat(3) + 1) * PI / 2 - 1
    enc = expr.enclose(128)
    assert _contains(enc, 2 * mp.pi - 1)

    recip = 1 / Zeta(2)
    assert _contains(recip.enclose(128), 6 / mp.pi**2)

    assert _contains(Pow(PI, -2).enclose(128), mp.pi**-2)
    assert _contains((PI**3).enclose(128), mp.pi**3)
    assert _contains((-PI).enclose(128), -mp.pi)
    assert _contains((Rat(Fraction(1, 2)) - PI).enclose(128), mp.mpf("0.5") - mp.pi)


def test_expression_leaves():
    assert GammaInt(6).enclose(32) == CertifiedReal(Fraction(120), Fraction(120), 32)
    assert Rat(Fraction(5, 3)).enclose(32).contains(Fraction(5, 3))
    assert Abs(Rat(-5)).enclose(32) == CertifiedReal(Fraction(5), Fraction(5), 32)
    assert _contains(Sqrt(Rat(2)).enclose(128), mp.sqrt(2))
    assert _contains(Exp(Rat(1)).enclose(128), mp.e)
    assert _contains(Log(Rat(2)).enclose(128), mp.log(2))


def test_product_helper():
    assert product([]).enclose(32).contains(1)
    enc = product([2, Fraction(1, 3), PI]).enclose(128)
    assert _contains(enc, 2 * mp.pi / 3)


# ---------------------------------------------------------------------------
# Comparisons


def test_outcome_labels():
    assert Outcome.CERTIFIED_TRUE.value == "CertifiedTrue"
    assert Outcome.CERTIFIED_FALSE.value == "CertifiedFalse"
    assert Outcome.INCONCLUSIVE.value == "Inconclusive"


def test_certified_compare_strict_relations():
    x = CertifiedReal(Fraction(1), Fraction(2), 64)
    assert certified_compare(x, 0, ">").outcome is Outcome.CERTIFIED_TRUE
    assert certified_compare(x, 3, ">").outcome is Outcome.CERTIFIED_FALSE
    assert certified_compare(x, Fraction(3, 2), ">").outcome is Outcome.INCONCLUSIVE
    assert certified_compare(x, 3, "<").outcome is Outcome.CERTIFIED_TRUE
    assert certified_compare(x, 1, "<").outcome is Outcome.CERTIFIED_FALSE
    assert certified_compare(x, 1, ">=").outcome is Outcome.CERTIFIED_TRUE
    assert certified_compare(x, 2, "<=").outcome is Outcome.CERTIFIED_TRUE


def test_certified_compare_equality_never_certified():
    # an interval cannot witness exact equality, even at width zero
    point = CertifiedReal(Fraction(1), Fraction(1), 64)
    assert certified_compare(point, 1, "=").outcome is Outcome.INCONCLUSIVE
    assert certified_compare(point, 2, "=").outcome is Outcome.CERTIFIED_FALSE


def test_certified_compare_rejects_unknown_relation():
    x = CertifiedReal(Fraction(1), Fraction(2), 64)
    with pytest.raises(ValueError, match="unknown relation"):
        certified_compare(x, 1, "!=")


def test_decision_decided_property():
    x = CertifiedReal(Fraction(1), Fraction(2), 64)
    assert Decision(Outcome.CERTIFIED_TRUE, 64, x).decided
    assert Decision(Outcome.CERTIFIED_FALSE, 64, x).decided
    assert not Decision(Outcome.INCONCLUSIVE, 64, x).decided


# ---------------------------------------------------------------------------
# Escalation


def test_escalation_raises_precision_until_decided():
    # pi < 355/113 by about 2.7e-7, invisible at 8 bits
    d = evaluate_with_escalation(PI, Fraction(355, 113), "<", 8, 1024)
    assert d.outcome is Outcome.CERTIFIED_TRUE
    assert d.precision_used > 8


def test_escalation_decides_false():
    d = evaluate_with_escalation(PI, 4, ">", 32, 64)
    assert d.outcome is Outcome.CERTIFIED_FALSE
    assert d.precision_used == 32


def test_escalation_inconclusive_at_ceiling():
    # threshold inside every enclosure the loop can produce: the midpoint
    # of a 300 bit enclosure of pi, compared at a 128 bit ceiling
    tight = enclose_pi(300)
    t = (tight.lo + tight.hi) / 2
    d = evaluate_with_escalation(PI, t, ">", 16, 128)
    assert d.outcome is Outcome.INCONCLUSIVE
    assert d.precision_used == 128
    assert d.note.startswith("undecided at ceiling 128")
    assert "still brackets the threshold" in d.note
    assert d.enclosure is not None and d.enclosure.contains(t)


def test_escalation_rejects_bad_arguments():
    with pytest.raises(ValueError, match="unknown relation"):
        evaluate_with_escalation(PI, 3, "~", 32, 64)
    with pytest.raises(ValueError, match="base precision"):
        evaluate_with_escalation(PI, 3, ">", 4, 64)
