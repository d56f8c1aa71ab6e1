import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import functions, sc
from padicmult import (
    Cyc,
    ExactInt,
    LocallyConstantFn,
    NonNeg,
    TeichProduct,
    TruncatedOp,
    WinZ,
    Word,
    alpha_endo,
    build_cyclic_rep,
    build_digit_rep,
    build_hs_rep,
    build_orbit_rep,
    check_covariance,
    check_matrix_units,
    digit_expand,
    intertwiner,
    kappa,
    orbit_decompose,
    pi0_symbol,
    present_product,
    shift_word,
    subgroup,
    symbol_product,
    symbol_vanishes,
    window_shift,
    word_from_key,
    word_key,
    word_value,
)
from padicmult.errors import (
    BasisMismatchError,
    DomainError,
    InsufficientPrecisionError,
    NotAUnitError,
    ValuationMismatchError,
)
from padicmult.scalars import ONE, ZERO

A = (sc(10), sc(11), sc(12))


# -- orbit decompositions ----------------------------------------------------


def test_orbit_decompose_examples():
    dec = orbit_decompose(5, 7, 1715, precision=3)
    # 1715 = 5 * 7^3 and 7^3 = 343 = 93 mod 125, inside the subgroup
    assert (dec.case, dec.p_exponent, dec.coset_index) == ("I", 1, 0)
    assert dec.tail == 93
    assert dec.tail in subgroup(5, 3, 7).element_set

    pure_power = orbit_decompose(5, 7, 25, precision=3)
    assert (pure_power.p_exponent, pure_power.coset_index, pure_power.tail) == (2, 0, 1)

    off_coset = orbit_decompose(5, 7, 50, precision=3)
    assert off_coset.p_exponent == 2
    assert off_coset.coset_index != 0
    assert off_coset.section_value * off_coset.tail % 125 == 2


def test_orbit_decompose_case_two():
    dec = orbit_decompose(5, TeichProduct(2), 3, precision=4)
    assert dec.case == "II" and dec.k is not None
    assert dec.tail % 5 == 1
    assert dec.recompose(TeichProduct(2)) % 5**4 == 3


def test_orbit_decompose_errors():
    with pytest.raises(DomainError):
        orbit_decompose(5, 7, 0)
    with pytest.raises(NotAUnitError):
        orbit_decompose(5, 10, 3)
    with pytest.raises(InsufficientPrecisionError):
        orbit_decompose(5, 7, 3, precision=2)  # threshold level is 3


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([(3, ExactInt(2)), (5, ExactInt(7)), (5, TeichProduct(2))]),
    st.integers(-4000, 4000).filter(bool),
)
def test_orbit_decompose_roundtrip(config, x):
    p, spec = config
    precision = 4
    dec = orbit_decompose(p, spec, x, precision=precision)
    modulus = p ** (dec.p_exponent + precision)
    assert dec.recompose(spec) % modulus == x % modulus
    if dec.case == "I":
        for level in range(1, precision + 1):
            assert dec.tail % p**level in subgroup(p, level, spec).element_set
    else:
        assert dec.tail % p == 1


# -- window and cyclic representations ----------------------------------------


def test_orbit_rep_diagonal_example():
    f = LocallyConstantFn(3, 1, A)
    shift, diag = build_orbit_rep(3, 2, 1, f, window=2)
    diagonal = [diag.entries[(WinZ(k), WinZ(k))] for k in range(-2, 3)]
    assert diagonal == [A[1], A[2], A[1], A[2], A[1]]
    assert shift.apply(WinZ(2)) == {WinZ(3): ONE}
    assert shift.adjoint() @ shift == TruncatedOp.identity(shift.domain)


def test_orbit_rep_constant_function():
    c = LocallyConstantFn.constant(5, 9)
    _, diag = build_orbit_rep(5, 7, 1, c, window=3)
    assert diag == TruncatedOp.identity(diag.domain).scale(sc(9))


def test_orbit_rep_periodic_indicator():
    # f is the indicator of 7 mod 25; 7^k = 7, 24, 18, 1 cycles with period 4
    f = LocallyConstantFn.indicator(5, 2, 7)
    _, diag = build_orbit_rep(5, 7, 1, f, window=4)
    hits = [k for k in range(-4, 5) if diag.entries.get((WinZ(k), WinZ(k))) == ONE]
    assert hits == [-3, 1]


def test_orbit_rep_rejects_non_units():
    f = LocallyConstantFn.constant(5, 1)
    with pytest.raises(NotAUnitError):
        build_orbit_rep(5, 10, 1, f)
    with pytest.raises(DomainError):
        build_orbit_rep(5, 7, 0, f)


def test_cyclic_rep_example():
    f = LocallyConstantFn(5, 1, tuple(sc(j) for j in range(5)))
    shift, diag = build_cyclic_rep(5, TeichProduct(2), 1, f)
    diagonal = [diag.entries[(Cyc(k, 4), Cyc(k, 4))] for k in range(4)]
    assert diagonal == [sc(1), sc(2), sc(4), sc(3)]
    assert shift.power(4) == TruncatedOp.identity(shift.domain)
    identity = TruncatedOp.identity(shift.domain)
    assert shift @ shift.adjoint() == identity
    assert shift.adjoint() @ shift == identity


def test_cyclic_rep_needs_root_of_unity():
    f = LocallyConstantFn.constant(5, 1)
    with pytest.raises(DomainError):
        build_cyclic_rep(5, 7, 1, f)


# -- digit machinery -----------------------------------------------------------


def test_digit_expand_examples():
    assert digit_expand(3, 1, 6, 7, 8).word == Word((1, 1))
    assert digit_expand(3, 1, 6, 0, 8).word == Word((0,))
    assert digit_expand(3, 1, 6, 13, 8).word == Word((1, 2))


def test_digit_expand_truncation():
    expansion = digit_expand(3, 1, 6, 4, 4)
    assert not expansion.exact
    assert len(expansion.digits) == 4
    for n in range(1, 5):
        partial = sum(d * 6**i for i, d in enumerate(expansion.digits[:n]))
        assert partial % 3**n == 4 % 3**n
    with pytest.raises(DomainError):
        expansion.word


def test_digit_expand_validation():
    with pytest.raises(DomainError):
        digit_expand(3, 1, 6, -1, 4)
    with pytest.raises(ValuationMismatchError):
        digit_expand(3, 2, 6, 7, 4)


@given(st.integers(0, 3**6 - 1))
def test_word_key_round_trip(key):
    word = word_from_key(key, 3)
    assert word_key(word, 3) == key


def test_kappa_and_shift():
    assert kappa(Word((1, 2))) == 1
    assert kappa(Word((0,))) == 0
    assert shift_word(Word((1, 2))) == Word((0, 1, 2))
    assert kappa(shift_word(Word((1, 2)))) == kappa(Word((1, 2))) + 1
    assert shift_word(Word((0,))) == Word((0,))


def test_digit_bijection_exhaustive():
    for p, r, level in [(3, 6, 1), (5, 10, 1)]:
        s = p**level
        for n in (1, 2, 3):
            modulus = p ** (n * level)
            image = {
                sum(d * r**i for i, d in enumerate(word)) % modulus
                for word in itertools.product(range(s), repeat=n)
            }
            assert len(image) == modulus


def test_digit_rep_shift_and_diagonal():
    f = LocallyConstantFn(3, 1, A)
    shift, diag = build_digit_rep(3, 1, ExactInt(6), f, max_len=3)
    # multiplication by 6 sends 7 = (1,1) to 42 = (0,1,1)
    assert shift.apply(Word((1, 1))) == {Word((0, 1, 1)): ONE}
    assert shift.apply(Word((0,))) == {Word((0,)): ONE}
    assert shift.adjoint() @ shift == TruncatedOp.identity(shift.domain)
    # 13 = (1,2) and 13 = 1 mod 3
    assert diag.entries[(Word((1, 2)), Word((1, 2)))] == A[1]
    assert word_value(Word((1, 2)), 6) == 13


def test_hs_rep_examples():
    f = LocallyConstantFn(3, 2, tuple(sc(j) for j in range(9)))
    shift, diag = build_hs_rep(3, 1, f, cutoff=10)
    assert shift.apply(NonNeg(1)) == {NonNeg(3): ONE}
    assert shift.apply(NonNeg(2)) == {NonNeg(6): ONE}
    assert shift.adjoint().apply(NonNeg(2)) == {}
    assert shift.adjoint() @ shift == TruncatedOp.identity(shift.domain)
    assert diag.entries[(NonNeg(7), NonNeg(7))] == sc(7)


def test_intertwiner_pairs():
    pairing = intertwiner(3, 1, 6, max_len=3)
    assert pairing.apply(NonNeg(7)) == {Word((1, 2)): ONE}
    assert pairing.apply(NonNeg(0)) == {Word((0,)): ONE}
    assert pairing.apply(NonNeg(4)) == {Word((1, 1)): ONE}
    identity = TruncatedOp.identity(pairing.domain)
    assert pairing.adjoint() @ pairing == identity


def test_intertwiner_conjugates_the_shift():
    p, r, level, max_len = 3, 6, 1, 3
    s = p**level
    pairing = intertwiner(p, level, r, max_len)
    pairing_up = intertwiner(p, level, r, max_len + 1)
    constant = LocallyConstantFn.constant(p, 1)
    index_shift, _ = build_hs_rep(p, level, constant, cutoff=s**max_len - 1)
    index_shift = index_shift.extended(
        codomain=tuple(NonNeg(l) for l in range(s ** (max_len + 1)))
    )
    word_shift, _ = build_digit_rep(p, level, ExactInt(r), constant, max_len)
    assert pairing_up @ index_shift == word_shift @ pairing


# -- symbols --------------------------------------------------------------------


def _fn(p, values):
    import math

    level = round(math.log(len(values), p)) if len(values) > 1 else 0
    return LocallyConstantFn(p, level, tuple(sc(v) for v in values))


def test_symbol_examples():
    vanishing = _fn(3, [0, 2, 5])
    assert pi0_symbol([(1, vanishing)]) == [(1, ZERO)]
    assert symbol_vanishes(pi0_symbol([(1, vanishing)]))

    unit = LocallyConstantFn.constant(3, 1)
    assert pi0_symbol([(0, unit)]) == [(0, ONE)]
    assert not symbol_vanishes(pi0_symbol([(0, unit)]))

    f = _fn(3, [3, 1, 1])
    g = _fn(3, [0, 4, 4])
    assert pi0_symbol([(2, f), (0, g)]) == [(0, ZERO), (2, sc(3))]


def test_symbol_folding():
    unit = LocallyConstantFn.constant(3, 1)
    folded = pi0_symbol([(5, unit), (1, unit)], modulus=4)
    assert folded == [(0, ZERO), (1, sc(2)), (2, ZERO), (3, ZERO)]


def test_symbol_duplicate_frequencies_combine():
    f = LocallyConstantFn.constant(3, 2)
    g = LocallyConstantFn.constant(3, -2)
    assert pi0_symbol([(1, f), (1, g)]) == [(1, ZERO)]


@settings(max_examples=40)
@given(st.data())
def test_symbol_of_product_is_product_of_symbols(data):
    p, spec = 3, ExactInt(2)
    left = [
        (data.draw(st.integers(-3, 3)), data.draw(functions(p)))
        for _ in range(data.draw(st.integers(1, 3)))
    ]
    right = [
        (data.draw(st.integers(-3, 3)), data.draw(functions(p)))
        for _ in range(data.draw(st.integers(1, 3)))
    ]
    product = present_product(left, right, p, spec)
    assert pi0_symbol(product) == symbol_product(pi0_symbol(left), pi0_symbol(right))


def test_present_product_needs_a_unit():
    f = LocallyConstantFn.constant(3, 1)
    with pytest.raises(NotAUnitError):
        present_product([(0, f)], [(0, f)], 3, ExactInt(6))


# -- relation checks --------------------------------------------------------------


def test_covariance_examples():
    f = LocallyConstantFn(3, 1, A)
    shift, diag = build_orbit_rep(3, 2, 1, f, window=4)
    _, diag_alpha = build_orbit_rep(3, 2, 1, alpha_endo(f, ExactInt(2)), window=4)
    assert check_covariance(shift, diag, diag_alpha)

    word_shift, word_diag = build_digit_rep(3, 1, ExactInt(6), f, max_len=2)
    _, word_alpha = build_digit_rep(3, 1, ExactInt(6), alpha_endo(f, ExactInt(6)), max_len=2)
    assert check_covariance(word_shift, word_diag, word_alpha, interior=word_shift.domain)


def test_covariance_constant_function_interior_geometry():
    # with f constant, shift diag shift* = f(0) * (shift shift*), which matches the
    # constant diagonal exactly on the fixed points of the range projection
    c = LocallyConstantFn.constant(3, 4)
    shift, diag = build_orbit_rep(3, 2, 1, c, window=3)
    _, diag_alpha = build_orbit_rep(3, 2, 1, alpha_endo(c, ExactInt(2)), window=3)
    assert check_covariance(shift, diag, diag_alpha)
    fixed = set(shift.range_fixed_points())
    assert fixed == {WinZ(k) for k in range(-2, 5)}
    lhs = shift @ diag @ shift.adjoint()
    assert lhs.apply(WinZ(-3)) == {}  # lost edge: projection kills the bottom index
    assert diag_alpha.apply(WinZ(-3)) == {WinZ(-3): sc(4)}


def test_covariance_detects_wrong_rhs():
    f = LocallyConstantFn(3, 1, A)
    shift, diag = build_orbit_rep(3, 2, 1, f, window=4)
    _, wrong = build_orbit_rep(3, 2, 1, f, window=4)  # not alpha of f
    assert not check_covariance(shift, diag, wrong)


def test_covariance_validates_bases():
    f = LocallyConstantFn(3, 1, A)
    shift, diag = build_orbit_rep(3, 2, 1, f, window=4)
    small = diag.restricted(tuple(WinZ(k) for k in range(-2, 3)))
    with pytest.raises(BasisMismatchError):
        check_covariance(shift, small, diag)
    with pytest.raises(BasisMismatchError):
        check_covariance(shift, diag, diag, interior=(WinZ(99),))


def test_block_family_realizes_the_full_representation():
    # the faithful picture is block diagonal over (power of p, coset); each
    # block is the orbit representation at x = p^L * section(j)
    from padicmult import quotient_group

    f = LocallyConstantFn(5, 2, tuple(sc(j % 7) for j in range(25)))
    alpha_f = alpha_endo(f, ExactInt(7))
    quotient = quotient_group(5, 7)
    for p_exponent in (0, 1, 2):
        for index in range(quotient.order):
            x = 5**p_exponent * quotient.section(index)
            shift, diag = build_orbit_rep(5, 7, x, f, window=5)
            _, diag_alpha = build_orbit_rep(5, 7, x, alpha_f, window=5)
            assert check_covariance(shift, diag, diag_alpha)


def test_matrix_units():
    assert check_matrix_units(5, TeichProduct(2))
    assert check_matrix_units(7, TeichProduct(3))
    with pytest.raises(DomainError):
        check_matrix_units(5, 7)
    with pytest.raises(DomainError):
        check_matrix_units(5, TeichProduct(2), window=3)


def test_window_shift_edges():
    v = window_shift(2)
    assert v.apply(WinZ(1)) == {WinZ(2): ONE}
    assert v.apply(WinZ(2)) == {}
