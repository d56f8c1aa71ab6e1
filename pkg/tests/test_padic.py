from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ODD_PRIMES
from padicmult import (
    Digits,
    ExactInt,
    PadicApprox,
    Prime,
    TeichProduct,
    divide_step,
    multiplier_residue,
    multiplier_text,
    multiplier_valuation,
    parse_multiplier,
    teichmuller,
    valuation,
)
from padicmult.errors import (
    ExcludedMultiplierError,
    InsufficientPrecisionError,
    NotAUnitError,
    NotPrimeError,
    ParseError,
    ValuationMismatchError,
    ZeroValuationError,
)
from padicmult.padic import multiplier_unit_residue


@pytest.mark.parametrize("bad", [2, 4, 9, 1, 0, -3, 15])
def test_odd_primes_only(bad):
    with pytest.raises(NotPrimeError):
        Prime(bad)


def test_prime_accepts_odd_primes():
    assert int(Prime(3)) == 3
    assert int(Prime(97)) == 97


# -- valuation --------------------------------------------------------------


def valuation_oracle(p, x):
    level = 0
    while x % p == 0:
        x //= p
        level += 1
    return level, x


def test_valuation_examples():
    assert valuation(5, 50) == (2, 2)
    assert valuation(3, 7) == (0, 7)
    assert valuation(5, 1715) == valuation_oracle(5, 1715) == (1, 343)


def test_valuation_of_zero():
    with pytest.raises(ZeroValuationError):
        valuation(3, 0)


@given(st.sampled_from(ODD_PRIMES), st.integers(-10**6, 10**6).filter(bool))
def test_valuation_reconstructs(p, x):
    level, unit = valuation(p, x)
    assert p**level * unit == x
    assert unit % p != 0


# -- Teichmuller lifts -------------------------------------------------------


def power_fixed_point(p, i, precision):
    modulus = p**precision
    current = i % modulus
    while pow(current, p, modulus) != current:
        current = pow(current, p, modulus)
    return current


def test_teichmuller_examples():
    assert teichmuller(5, 1, 4) == 1
    assert teichmuller(5, 4, 2) == 24
    # oracle: iterate a -> a^p from 2; 2^5 = 32 = 7 mod 25 and 7^5 = 7 mod 25
    assert power_fixed_point(5, 2, 2) == 7
    assert teichmuller(5, 2, 2) == 7


def test_teichmuller_rejects_non_units():
    with pytest.raises(NotAUnitError):
        teichmuller(5, 10, 3)
    with pytest.raises(InsufficientPrecisionError):
        teichmuller(5, 2, 0)


@given(
    st.sampled_from(ODD_PRIMES),
    st.integers(1, 6),
    st.integers(1, 6),
    st.data(),
)
def test_teichmuller_laws(p, precision, lower, data):
    i = data.draw(st.integers(1, p - 1))
    lower = min(lower, precision)
    w = teichmuller(p, i, precision)
    modulus = p**precision
    assert w == power_fixed_point(p, i, precision)
    assert pow(w, p - 1, modulus) == 1
    assert w % p == i
    assert w % p**lower == teichmuller(p, i, lower)


# -- division step -----------------------------------------------------------


def test_divide_step_examples():
    assert divide_step(3, 1, 6, 7) == (1, 1)
    assert divide_step(3, 1, 6, 0) == (0, 0)
    assert divide_step(3, 1, 6, 25) == (4, 1)


def test_divide_step_valuation_mismatch():
    with pytest.raises(ValuationMismatchError):
        divide_step(3, 2, 6, 7)
    with pytest.raises(ValuationMismatchError):
        divide_step(3, 1, 5, 7)


def test_divide_step_rational_quotient():
    q, c = divide_step(3, 1, 6, 4)
    assert c == 1 and q == Fraction(1, 2)
    assert q * 6 + c == 4


@given(
    st.sampled_from([(3, 6), (3, -3), (5, 10), (7, 21), (5, 75)]),
    st.integers(0, 10**6),
)
def test_divide_step_contract(config, x):
    p, r = config
    level, _ = valuation(p, r)
    q, c = divide_step(p, level, r, x)
    assert 0 <= c < p**level
    assert q * r + c == x
    assert Fraction(q).denominator % p != 0


# -- fixed-precision residues --------------------------------------------------


@given(
    st.sampled_from(ODD_PRIMES),
    st.integers(-10**9, 10**9),
    st.integers(1, 8),
    st.integers(1, 8),
    st.integers(1, 8),
)
def test_reduction_compatibility(p, x, n1, n2, n3):
    high, mid, low = sorted((n1, n2, n3), reverse=True)
    a = PadicApprox.from_int(p, high, x)
    assert a.reduce(mid).reduce(low) == a.reduce(low)


def test_reduce_cannot_raise_precision():
    a = PadicApprox.from_int(3, 2, 4)
    with pytest.raises(InsufficientPrecisionError):
        a.reduce(5)


def test_padic_arithmetic_matches_integers():
    a = PadicApprox.from_int(5, 4, 123)
    b = PadicApprox.from_int(5, 3, -77)
    assert (a + b).residue == (123 - 77) % 5**3
    assert (a * b).residue == (123 * -77) % 5**3
    assert (a - b).precision == 3
    assert PadicApprox.from_int(5, 3, 2).inverse().residue * 2 % 5**3 == 1
    with pytest.raises(NotAUnitError):
        PadicApprox.from_int(5, 3, 10).inverse()


def test_negative_values_normalize():
    assert PadicApprox.from_int(5, 2, -1).residue == 24
    assert multiplier_residue(-1, 5, 2) == 24


# -- multiplier specs ------------------------------------------------------------


def test_excluded_multipliers():
    with pytest.raises(ExcludedMultiplierError):
        ExactInt(0)
    with pytest.raises(ExcludedMultiplierError):
        ExactInt(1)


def test_multiplier_grammar_round_trip():
    for text, spec in [
        ("7", ExactInt(7)),
        ("-7", ExactInt(-7)),
        ("teich(2)", TeichProduct(2)),
        ("-teich(3)", TeichProduct(3, -1)),
        ("digits:[1,2,0]", Digits((1, 2, 0))),
    ]:
        assert parse_multiplier(text) == spec
        assert parse_multiplier(multiplier_text(spec)) == spec


def test_multiplier_parse_rejects_garbage():
    for text in ["", "teich()", "digits:[]", "1.5", "teich(-2)"]:
        with pytest.raises(ParseError):
            parse_multiplier(text)


def test_teich_product_resolution():
    assert multiplier_residue(TeichProduct(2), 5, 2) == 7
    assert multiplier_residue(TeichProduct(2, -1), 5, 2) == 18
    assert multiplier_valuation(TeichProduct(4), 5) == 0
    with pytest.raises(ExcludedMultiplierError):
        multiplier_residue(TeichProduct(5), 5, 2)


def test_digits_precision_limits():
    spec = Digits((2, 1, 2))
    assert multiplier_residue(spec, 5, 3) == 57
    assert multiplier_residue(spec, 5, 1) == 2
    with pytest.raises(InsufficientPrecisionError):
        multiplier_residue(spec, 5, 4)
    with pytest.raises(ParseError):
        multiplier_residue(Digits((7,)), 5, 1)
    with pytest.raises(InsufficientPrecisionError):
        multiplier_valuation(Digits((0, 0)), 5)


def test_digits_unit_split():
    assert multiplier_unit_residue(Digits((0, 2, 1)), 5, 2) == (1, 7)
    assert multiplier_unit_residue(ExactInt(50), 5, 2) == (2, 2)
    with pytest.raises(InsufficientPrecisionError):
        multiplier_unit_residue(Digits((0, 2)), 5, 2)
