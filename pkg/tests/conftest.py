"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st

from padicmult import LocallyConstantFn, Scalar

ODD_PRIMES = (3, 5, 7)


def sc(real, imag=0) -> Scalar:
    return Scalar(Fraction(real), Fraction(imag))


@st.composite
def scalars(draw):
    real = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
    imag = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
    if draw(st.booleans()):
        imag = Fraction(0)
    return Scalar(real, imag)


@st.composite
def functions(draw, p: int, max_level: int = 2):
    level = draw(st.integers(0, max_level))
    values = draw(
        st.lists(scalars(), min_size=p**level, max_size=p**level).map(tuple)
    )
    return LocallyConstantFn(p, level, values)
