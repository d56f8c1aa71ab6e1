"""Fixed-precision p-adic arithmetic: residues, valuations, Teichmuller lifts.

A p-adic integer is modeled by its residue mod p^N for an explicit precision
N; reducing precision is a ring homomorphism and reductions compose exactly.
Only odd primes are supported.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime

from .errors import (
    ExcludedMultiplierError,
    InsufficientPrecisionError,
    NotAUnitError,
    NotPrimeError,
    ParseError,
    ValuationMismatchError,
    ZeroValuationError,
)


@lru_cache(maxsize=None)
def _require_odd_prime(p: int) -> int:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise NotPrimeError(f"p must be an odd prime >= 3, got {p!r}")
    return p


@dataclass(frozen=True)
class Prime:
    """An odd prime; the base of every residue computation."""

    p: int

    def __post_init__(self) -> None:
        _require_odd_prime(self.p)

    def __int__(self) -> int:
        return self.p


def as_prime(p: int | Prime) -> int:
    """Validate and unwrap a prime given as an int or a Prime."""
    if isinstance(p, Prime):
        return p.p
    return _require_odd_prime(p)


def valuation(p: int | Prime, x: int) -> tuple[int, int]:
    """Split a nonzero integer as x = p^L * unit with the unit coprime to p."""
    p = as_prime(p)
    if x == 0:
        raise ZeroValuationError("zero has infinite valuation")
    level = 0
    while x % p == 0:
        x //= p
        level += 1
    return level, x


def rational_residue(value: int | Fraction, p: int | Prime, precision: int) -> int:
    """Reduce a rational with p-coprime denominator to a residue mod p^precision."""
    p = as_prime(p)
    if precision < 0:
        raise InsufficientPrecisionError("precision must be non-negative")
    modulus = p**precision
    if isinstance(value, int):
        return value % modulus
    if value.denominator % p == 0:
        raise NotAUnitError(f"{value} is not a p-adic integer for p={p}")
    return value.numerator * pow(value.denominator, -1, modulus) % modulus if precision else 0


def teichmuller(p: int | Prime, i: int, precision: int) -> int:
    """The unique (p-1)-st root of unity congruent to i mod p, mod p^precision.

    Computed by the closed form i^(p^(precision-1)) mod p^precision, the limit
    of the contraction a -> a^p.  Only the class of i mod p matters.
    """
    p = as_prime(p)
    if precision < 1:
        raise InsufficientPrecisionError("precision must be at least 1")
    if i % p == 0:
        raise NotAUnitError(f"{i} is not a unit mod {p}")
    return pow(i, p ** (precision - 1), p**precision)


def divide_step(
    p: int | Prime, level: int, r: int, x: int | Fraction
) -> tuple[int | Fraction, int]:
    """One division step x = q*r + c with 0 <= c < p^level, for r of valuation level.

    The quotient q is an exact rational whose denominator is coprime to p
    (hence still a p-adic integer); it is a plain int whenever r divides x - c
    over the integers.
    """
    p = as_prime(p)
    r_level, _ = valuation(p, r)
    if r_level != level or level < 1:
        raise ValuationMismatchError("multiplier valuation mismatch")
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotAUnitError(f"{x} is not a p-adic integer for p={p}")
    c = rational_residue(x, p, level)
    q = (x - c) / r
    return (int(q) if q.denominator == 1 else q), c


@dataclass(frozen=True)
class PadicApprox:
    """A p-adic integer known modulo p^precision."""

    p: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        _require_odd_prime(self.p)
        if self.precision < 1:
            raise InsufficientPrecisionError("precision must be at least 1")
        if not 0 <= self.residue < self.p**self.precision:
            raise ParseError(
                f"residue {self.residue} out of range for precision {self.precision}"
            )

    @classmethod
    def from_int(cls, p: int | Prime, precision: int, value: int | Fraction) -> PadicApprox:
        p = as_prime(p)
        return cls(p, precision, rational_residue(value, p, precision))

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    def reduce(self, precision: int) -> PadicApprox:
        """Forget digits down to a smaller precision; reductions compose exactly."""
        if precision > self.precision:
            raise InsufficientPrecisionError(
                f"cannot raise precision {self.precision} to {precision}"
            )
        return PadicApprox(self.p, precision, self.residue % self.p**precision)

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def _wrap(self, other: PadicApprox | int) -> PadicApprox:
        if isinstance(other, int):
            return PadicApprox.from_int(self.p, self.precision, other)
        if other.p != self.p:
            raise ParseError("mixed primes in p-adic arithmetic")
        return other

    def _binop(self, other: PadicApprox | int, fn) -> PadicApprox:
        other = self._wrap(other)
        precision = min(self.precision, other.precision)
        modulus = self.p**precision
        return PadicApprox(self.p, precision, fn(self.residue, other.residue) % modulus)

    def __add__(self, other: PadicApprox | int) -> PadicApprox:
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other: PadicApprox | int) -> PadicApprox:
        return self._binop(other, lambda a, b: a - b)

    def __mul__(self, other: PadicApprox | int) -> PadicApprox:
        return self._binop(other, lambda a, b: a * b)

    def __pow__(self, exponent: int) -> PadicApprox:
        if exponent < 0 and not self.is_unit():
            raise NotAUnitError("negative power of a non-unit")
        return PadicApprox(self.p, self.precision, pow(self.residue, exponent, self.modulus))

    def inverse(self) -> PadicApprox:
        if not self.is_unit():
            raise NotAUnitError(f"{self.residue} is not a unit mod {self.p}")
        return self**-1


# --- multiplier specifications -------------------------------------------------
#
# A multiplier r can be given three ways: an exact nonzero integer (not 1),
# a signed Teichmuller representative (always a root of unity), or a finite
# string of base-p digits carrying no exactness claim beyond its length.


@dataclass(frozen=True)
class ExactInt:
    n: int

    def __post_init__(self) -> None:
        if self.n in (0, 1):
            raise ExcludedMultiplierError("excluded multiplier: r must avoid 0 and 1")


@dataclass(frozen=True)
class TeichProduct:
    i: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ParseError("sign must be +1 or -1")
        if self.i < 2:
            raise ExcludedMultiplierError("Teichmuller index must be at least 2")


@dataclass(frozen=True)
class Digits:
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits or any(d < 0 for d in self.digits):
            raise ParseError("digit strings must be non-empty with digits >= 0")


MultiplierSpec = ExactInt | TeichProduct | Digits


def as_multiplier(r: int | MultiplierSpec) -> MultiplierSpec:
    if isinstance(r, (ExactInt, TeichProduct, Digits)):
        return r
    return ExactInt(r)


def multiplier_precision(r: int | MultiplierSpec) -> int | None:
    """Number of known base-p digits, or None when the value is exact."""
    r = as_multiplier(r)
    return len(r.digits) if isinstance(r, Digits) else None


def multiplier_residue(r: int | MultiplierSpec, p: int | Prime, precision: int) -> int:
    """Resolve a multiplier to its residue mod p^precision."""
    p = as_prime(p)
    r = as_multiplier(r)
    if isinstance(r, ExactInt):
        return r.n % p**precision
    if isinstance(r, TeichProduct):
        if not 2 <= r.i <= p - 1:
            raise ExcludedMultiplierError(
                f"Teichmuller index must lie in [2, {p - 1}] for p={p}"
            )
        if precision == 0:
            return 0
        return r.sign * teichmuller(p, r.i, precision) % p**precision
    if any(d >= p for d in r.digits):
        raise ParseError(f"digit out of range for base {p}")
    if precision > len(r.digits):
        raise InsufficientPrecisionError(
            f"multiplier known to {len(r.digits)} digits, {precision} requested"
        )
    return sum(d * p**k for k, d in enumerate(r.digits[:precision]))


def multiplier_valuation(r: int | MultiplierSpec, p: int | Prime) -> int:
    """p-adic valuation of a multiplier; digit strings must show a nonzero digit."""
    p = as_prime(p)
    r = as_multiplier(r)
    if isinstance(r, ExactInt):
        return valuation(p, r.n)[0]
    if isinstance(r, TeichProduct):
        return 0
    for k, d in enumerate(r.digits):
        if d:
            return k
    raise InsufficientPrecisionError("all known digits are zero; valuation undetermined")


def multiplier_unit_residue(
    r: int | MultiplierSpec, p: int | Prime, precision: int
) -> tuple[int, int]:
    """Split r = p^N * r' and return (N, r' mod p^precision)."""
    p = as_prime(p)
    r = as_multiplier(r)
    level = multiplier_valuation(r, p)
    if isinstance(r, ExactInt):
        return level, (r.n // p**level) % p**precision
    if isinstance(r, TeichProduct):
        return 0, multiplier_residue(r, p, precision)
    shifted = r.digits[level:]
    if precision > len(shifted):
        raise InsufficientPrecisionError(
            f"unit part known to {len(shifted)} digits, {precision} requested"
        )
    return level, sum(d * p**k for k, d in enumerate(shifted[:precision]))


_TEICH_RE = re.compile(r"^(-?)teich\((\d+)\)$")
_DIGITS_RE = re.compile(r"^digits:\[(\d+(?:,\s*\d+)*)\]$")


def parse_multiplier(text: str) -> MultiplierSpec:
    """Parse the multiplier grammar: "-7", "teich(2)", "-teich(3)", "digits:[1,2,0]"."""
    text = text.strip()
    match = _TEICH_RE.match(text)
    if match:
        return TeichProduct(int(match.group(2)), -1 if match.group(1) else 1)
    match = _DIGITS_RE.match(text)
    if match:
        return Digits(tuple(int(d) for d in match.group(1).split(",")))
    try:
        return ExactInt(int(text))
    except ValueError:
        raise ParseError(f"unrecognized multiplier spec: {text!r}") from None


def multiplier_text(r: int | MultiplierSpec) -> str:
    r = as_multiplier(r)
    if isinstance(r, ExactInt):
        return str(r.n)
    if isinstance(r, TeichProduct):
        return f"{'-' if r.sign < 0 else ''}teich({r.i})"
    return "digits:[" + ",".join(str(d) for d in r.digits) + "]"
