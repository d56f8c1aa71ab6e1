"""Finite truncations of the shift/diagonal operator representations, the
orbit and digit decompositions behind them, and the exact relation checks.

Truncation policy: shift sections map a window into a one-step-larger
codomain window instead of being cut square, so isometry relations hold
exactly; relation checks that involve adjoints are asserted on explicitly
declared interiors where no information is lost to the truncation edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classification import CaseI, CaseII, classify
from .errors import (
    BasisMismatchError,
    DomainError,
    InsufficientPrecisionError,
    NotAUnitError,
    ValuationMismatchError,
)
from .functions import LocallyConstantFn
from .operators import Cyc, NonNeg, TruncatedOp, WinZ, Word
from .padic import (
    MultiplierSpec,
    Prime,
    as_prime,
    divide_step,
    multiplier_residue,
    multiplier_valuation,
    teichmuller,
    valuation,
)
from .scalars import Scalar
from .unit_groups import DEFAULT_NR_CAP, quotient_group


# --- orbit decompositions -------------------------------------------------------


@dataclass(frozen=True)
class OrbitDecomposition:
    """A nonzero integer factored along the orbit structure of a unit multiplier.

    Case I:  x = p^L * section * tail with the tail in the closed group of
    powers of r at every level up to the precision.
    Case II: x = r^k * p^L * section * tail with the section a root of unity
    and the tail congruent to 1 mod p.
    """

    case: str
    p: int
    p_exponent: int
    coset_index: int
    section_value: int
    tail: int
    precision: int
    k: int | None = None

    def recompose(self, r: int | MultiplierSpec) -> int:
        """The product of the parts, as a residue mod p^(p_exponent + precision)."""
        modulus = self.p**self.precision
        unit = self.section_value * self.tail % modulus
        if self.case == "II":
            rho = multiplier_residue(r, self.p, self.precision)
            unit = unit * pow(rho, self.k, modulus) % modulus
        return self.p**self.p_exponent * unit


def _roots_quotient(p: int, generator_residue: int) -> tuple[list[int], dict[int, tuple[int, int]]]:
    """Cosets of <g> inside (Z/p)^x: smallest representatives (identity coset
    first) and a lookup residue -> (coset index, power of g)."""
    powers = [1]
    current = generator_residue % p
    while current != 1:
        powers.append(current)
        current = current * generator_residue % p
    reps: list[int] = []
    lookup: dict[int, tuple[int, int]] = {}
    for i in range(1, p):
        if i in lookup:
            continue
        index = len(reps)
        reps.append(i)
        for k, g in enumerate(powers):
            lookup[i * g % p] = (index, k)
    # the identity's coset is found first because lookup[1] is set when i = 1
    return reps, lookup


def orbit_decompose(
    p: int | Prime,
    r: int | MultiplierSpec,
    x: int,
    precision: int = 6,
    cap: int = DEFAULT_NR_CAP,
) -> OrbitDecomposition:
    """Factor a nonzero integer along the orbits of multiplication by a unit r."""
    p = as_prime(p)
    if x == 0:
        raise DomainError("zero admits no orbit decomposition")
    verdict = classify(p, r, precision=precision, cap=cap)
    if not isinstance(verdict, (CaseI, CaseII)):
        raise NotAUnitError("orbit decompositions need a unit multiplier")
    p_exponent, unit = valuation(p, x)
    modulus = p**precision
    unit %= modulus
    if isinstance(verdict, CaseI):
        quotient = quotient_group(p, r, cap)
        if precision < quotient.level:
            raise InsufficientPrecisionError(
                f"precision {precision} below the threshold level {quotient.level}"
            )
        index = quotient.coset_index(unit)
        section = quotient.section(index)
        tail = unit * pow(section, -1, modulus) % modulus
        return OrbitDecomposition("I", p, p_exponent, index, section, tail, precision)
    generator = multiplier_residue(r, p, 1)
    reps, lookup = _roots_quotient(p, generator)
    index, k = lookup[unit % p]
    section = teichmuller(p, reps[index], precision) if precision else 0
    omega = teichmuller(p, unit % p, precision)
    tail = unit * pow(omega, -1, modulus) % modulus
    return OrbitDecomposition("II", p, p_exponent, index, section, tail, precision, k=k)


# --- window and cyclic representations ------------------------------------------


def _unit_power_residue(r: int | MultiplierSpec, p: int, level: int, k: int) -> int:
    """r^k mod p^level for a unit r and any integer k."""
    if level == 0:
        return 0
    rho = multiplier_residue(r, p, level)
    if rho % p == 0:
        raise NotAUnitError("orbit representations need an invertible multiplier")
    return pow(rho, k, p**level)


def build_orbit_rep(
    p: int | Prime,
    r: int | MultiplierSpec,
    x: int,
    f: LocallyConstantFn,
    window: int = 8,
) -> tuple[TruncatedOp, TruncatedOp]:
    """The bilateral-shift section and the diagonal of f along the orbit of x.

    The shift maps the window {-K..K} into {-K..K+1}; the diagonal carries
    f(r^k x) at position k over the domain window.
    """
    p = as_prime(p)
    if x == 0:
        raise DomainError("the orbit of zero is trivial; x must be nonzero")
    if multiplier_valuation(r, p) != 0:
        raise NotAUnitError("orbit representations need an invertible multiplier")
    if f.p != p:
        raise BasisMismatchError("function prime does not match")
    domain = tuple(WinZ(k) for k in range(-window, window + 1))
    codomain = tuple(WinZ(k) for k in range(-window, window + 2))
    shift = TruncatedOp.build(
        domain, codomain, {(WinZ(k + 1), WinZ(k)): 1 for k in range(-window, window + 1)}
    )
    diag = TruncatedOp.diagonal(
        domain, lambda ix: f(_unit_power_residue(r, p, f.level, ix.k) * x)
    )
    return shift, diag


def build_cyclic_rep(
    p: int | Prime, r: int | MultiplierSpec, x: int, f: LocallyConstantFn
) -> tuple[TruncatedOp, TruncatedOp]:
    """The cyclic-shift representation attached to a finite-order multiplier.

    The shift is the exact n-cycle on l^2(Z/nZ) (a genuine unitary), and the
    diagonal carries f(r^k x).
    """
    p = as_prime(p)
    verdict = classify(p, r)
    if not isinstance(verdict, CaseII):
        raise DomainError("cyclic representations need a root-of-unity multiplier")
    n = verdict.order
    basis = tuple(Cyc(k, n) for k in range(n))
    shift = TruncatedOp.build(
        basis, basis, {(Cyc((k + 1) % n, n), Cyc(k, n)): 1 for k in range(n)}
    )
    diag = TruncatedOp.diagonal(
        basis, lambda ix: f(_unit_power_residue(r, p, f.level, ix.k) * x)
    )
    return shift, diag


# --- digit expansions and the valuation-case representation ----------------------


@dataclass(frozen=True)
class DigitExpansion:
    """Digits of x in powers of r, flagged exact when the expansion terminated.

    Exact expansions never end in a zero digit and so name canonical basis
    words; truncated ones are approximations whose partial sums still match x
    modulo rising powers of p, but they do not label basis vectors.
    """

    digits: tuple[int, ...]
    exact: bool

    @property
    def word(self) -> Word:
        if not self.exact:
            raise DomainError("truncated expansions do not name basis words")
        return Word(self.digits)


def digit_expand(
    p: int | Prime, level: int, r: int, x: int, max_len: int
) -> DigitExpansion:
    """Expand x >= 0 in powers of r with digits below p^level.

    Iterates the division step x = q r + c.  Elements of the digit set
    terminate at their exact word; anything else is cut at max_len digits and
    flagged, its partial sums matching x mod p^(n * level) for every n.
    """
    p = as_prime(p)
    if x < 0:
        raise DomainError("digit expansion is defined for x >= 0")
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    digits: list[int] = []
    quotient: int | Fraction = x
    while quotient != 0 and len(digits) < max_len:
        quotient, c = divide_step(p, level, r, quotient)
        digits.append(c)
    if not digits:
        digits = [0]
    return DigitExpansion(tuple(digits), exact=quotient == 0)


def word_value(word: Word, r: int) -> int:
    """The integer sum of digits times powers of r."""
    return sum(d * r**i for i, d in enumerate(word.digits))


def word_key(word: Word, s: int) -> int:
    """The digit word read in base s; pairs words with non-negative positions."""
    return sum(d * s**i for i, d in enumerate(word.digits))


def word_from_key(key: int, s: int) -> Word:
    if key == 0:
        return Word((0,))
    digits = []
    while key:
        key, d = divmod(key, s)
        digits.append(d)
    return Word(tuple(digits))


def canonical_words(s: int, max_len: int) -> tuple[Word, ...]:
    """All canonical words of length <= max_len, ordered by their base-s key."""
    return tuple(word_from_key(k, s) for k in range(s**max_len))


def shift_word(word: Word) -> Word:
    """The word of r*x: prepend a zero digit; the zero word is fixed."""
    if word.is_zero():
        return word
    return Word((0,) + word.digits)


def kappa(word: Word) -> int:
    """Index of the highest nonzero digit (0 for the zero word).

    Canonical words have no trailing zeros, so this is the last position; it
    increases by exactly one under the digit shift.
    """
    return len(word.digits) - 1


def build_digit_rep(
    p: int | Prime,
    level: int,
    r: int | MultiplierSpec,
    f: LocallyConstantFn,
    max_len: int,
) -> tuple[TruncatedOp, TruncatedOp]:
    """Multiplication-by-r as a digit shift, and the diagonal of f on words.

    The domain is every canonical word of length <= max_len; the shift
    prepends a zero digit (length may grow to max_len + 1) and is an exact
    isometry on the whole domain.
    """
    p = as_prime(p)
    if multiplier_valuation(r, p) != level or level < 1:
        raise ValuationMismatchError("multiplier valuation mismatch")
    s = p**level
    domain = canonical_words(s, max_len)
    codomain = canonical_words(s, max_len + 1)
    shift = TruncatedOp.build(domain, codomain, {(shift_word(w), w): 1 for w in domain})
    modulus = p**f.level
    rho = multiplier_residue(r, p, f.level)

    def value_residue(word: Word) -> int:
        return sum(d * pow(rho, i, modulus) for i, d in enumerate(word.digits)) % modulus

    diag = TruncatedOp.diagonal(domain, lambda w: f(value_residue(w)))
    return shift, diag


def build_hs_rep(
    p: int | Prime, level: int, f: LocallyConstantFn, cutoff: int
) -> tuple[TruncatedOp, TruncatedOp]:
    """The multiply-the-index shift l -> s*l on l^2(Z>=0) with s = p^level,
    and the diagonal of f at the integer points."""
    p = as_prime(p)
    if level < 1:
        raise ValuationMismatchError("the base exponent must be at least 1")
    s = p**level
    domain = tuple(NonNeg(l) for l in range(cutoff + 1))
    codomain = tuple(NonNeg(l) for l in range(s * cutoff + 1))
    shift = TruncatedOp.build(
        domain, codomain, {(NonNeg(s * l), NonNeg(l)): 1 for l in range(cutoff + 1)}
    )
    diag = TruncatedOp.diagonal(domain, lambda ix: f(ix.l))
    return shift, diag


def intertwiner(p: int | Prime, level: int, r: int, max_len: int) -> TruncatedOp:
    """The basis pairing between non-negative positions and digit words.

    Sends position sum(d_i s^i) to the word (d_0, d_1, ...) with s = p^level;
    a permutation that conjugates the index shift into the digit shift.
    """
    p = as_prime(p)
    if multiplier_valuation(r, p) != level or level < 1:
        raise ValuationMismatchError("multiplier valuation mismatch")
    s = p**level
    domain = tuple(NonNeg(k) for k in range(s**max_len))
    codomain = canonical_words(s, max_len)
    entries = {(word_from_key(k, s), NonNeg(k)): 1 for k in range(s**max_len)}
    return TruncatedOp.build(domain, codomain, entries)


# --- symbols of finite sums ------------------------------------------------------

SymbolTerm = tuple[int, Scalar]
Presentation = list[tuple[int, LocallyConstantFn]]


def pi0_symbol(
    terms: Presentation, modulus: int | None = None
) -> list[SymbolTerm]:
    """Image of a finite sum of shift powers times diagonals under evaluation at 0.

    Each term (n, f) contributes f(0) at frequency n; the result is the
    coefficient list of a trigonometric polynomial on the circle.  With a
    modulus, frequencies are folded mod it (the finite-cyclic variant) and
    all residue frequencies are listed.  The element lies in the kernel ideal
    exactly when every coefficient vanishes.
    """
    if modulus is not None and modulus < 1:
        raise DomainError("the folding modulus must be positive")
    coefficients: dict[int, Scalar] = {}
    for n, f in terms:
        key = n % modulus if modulus else n
        coefficients[key] = coefficients.get(key, Scalar()) + f(0)
    if modulus:
        return [(j, coefficients.get(j, Scalar())) for j in range(modulus)]
    return sorted(coefficients.items())


def symbol_vanishes(symbol: list[SymbolTerm]) -> bool:
    return all(not coefficient for _, coefficient in symbol)


def symbol_product(a: list[SymbolTerm], b: list[SymbolTerm]) -> list[SymbolTerm]:
    """Laurent product of two coefficient lists (zero coefficients kept sparse)."""
    out: dict[int, Scalar] = {}
    for n, s in a:
        for m, t in b:
            out[n + m] = out.get(n + m, Scalar()) + s * t
    return sorted(out.items())


def present_product(
    a: Presentation, b: Presentation, p: int | Prime, r: int | MultiplierSpec
) -> Presentation:
    """The product of two finite sums, re-presented as a finite sum.

    Uses the commutation rule (diagonal of f) . shift = shift . (diagonal of
    f composed with multiplication), which needs an invertible multiplier.
    """
    p = as_prime(p)
    if multiplier_valuation(r, p) != 0:
        raise NotAUnitError("re-presentation of products needs a unit multiplier")
    combined: dict[int, LocallyConstantFn] = {}
    for n_a, f in a:
        for n_b, g in b:
            moved = _beta_power(f, p, r, n_b) * g
            key = n_a + n_b
            combined[key] = combined[key] + moved if key in combined else moved
    return sorted(combined.items())


def _beta_power(f: LocallyConstantFn, p: int, r: int | MultiplierSpec, n: int) -> LocallyConstantFn:
    """Precompose f with multiplication by r^n (any integer n, unit r)."""
    if f.level == 0 or n == 0:
        return f
    modulus = p**f.level
    rho = pow(multiplier_residue(r, p, f.level), n, modulus)
    # inline the precomposition: rho may be 1, which is not a valid multiplier spec
    values = tuple(f.values[rho * j % modulus] for j in range(modulus))
    return LocallyConstantFn(p, f.level, values)


# --- relation checks --------------------------------------------------------------


def check_covariance(
    shift: TruncatedOp,
    diag: TruncatedOp,
    diag_alpha: TruncatedOp,
    interior: tuple | None = None,
) -> bool:
    """Exact check of shift . diag . shift* = diag_alpha on an interior.

    When no interior is given it defaults to the codomain indices on which
    shift . shift* acts as the identity, intersected with diag_alpha's
    domain: on those indices the adjoint loses nothing to the truncation.
    The digit and index-shift sections lose nothing anywhere, so callers may
    pass the whole codomain explicitly.
    """
    if diag.domain != shift.domain or diag.codomain != shift.domain:
        raise BasisMismatchError("the middle diagonal must be square on the shift's domain")
    lhs = shift @ diag @ shift.adjoint()
    rhs_domain = set(diag_alpha.domain)
    if interior is None:
        interior = tuple(ix for ix in shift.range_fixed_points() if ix in rhs_domain)
    else:
        codomain = set(shift.codomain)
        for ix in interior:
            if ix not in codomain or ix not in rhs_domain:
                raise BasisMismatchError("interior index outside the compared bases")
    return all(lhs.apply(ix) == diag_alpha.apply(ix) for ix in interior)


def window_shift(window: int) -> TruncatedOp:
    """The square bilateral-shift section on {-K..K}; the top edge maps out."""
    basis = tuple(WinZ(k) for k in range(-window, window + 1))
    entries = {(WinZ(k + 1), WinZ(k)): 1 for k in range(-window, window)}
    return TruncatedOp.build(basis, basis, entries)


def check_matrix_units(
    p: int | Prime, r: int | MultiplierSpec, window: int | None = None
) -> bool:
    """For a finite-order multiplier, verify the matrix-unit form of the shift.

    With n the order, P0 the projection onto window positions divisible by n,
    P_{i,j} = v^i P0 (v*)^j and u = v^n, checks

        v = P_{1,0} + P_{2,1} + ... + P_{n-1,n-2} + u P_{0,n-1}

    and that u commutes with every P_{i,j}, both exactly on window interiors
    wide enough that no composition touches the truncation edge.
    """
    p = as_prime(p)
    verdict = classify(p, r)
    if not isinstance(verdict, CaseII):
        raise DomainError("matrix-unit structure needs a root-of-unity multiplier")
    n = verdict.order
    K = window if window is not None else 3 * n + 1
    if K < 2 * n + 1:
        raise DomainError("window too small for an edge-free check")
    v = window_shift(K)
    v_star = v.adjoint()
    basis = v.domain
    p0 = TruncatedOp.diagonal(basis, lambda ix: 1 if ix.k % n == 0 else 0)
    v_pow = [TruncatedOp.identity(basis)]
    star_pow = [TruncatedOp.identity(basis)]
    for _ in range(n):
        v_pow.append(v @ v_pow[-1])
        star_pow.append(v_star @ star_pow[-1])

    def unit(i: int, j: int) -> TruncatedOp:
        return v_pow[i] @ p0 @ star_pow[j]

    u = v_pow[n]
    rhs = u @ unit(0, n - 1)
    for i in range(1, n):
        rhs = rhs + unit(i, i - 1)
    for k in range(-K + n, K - n + 1):
        if v.apply(WinZ(k)) != rhs.apply(WinZ(k)):
            return False
    for i in range(n):
        for j in range(n):
            left = u @ unit(i, j)
            right = unit(i, j) @ u
            for k in range(-K + 2 * n, K - 2 * n + 1):
                if left.apply(WinZ(k)) != right.apply(WinZ(k)):
                    return False
    return True
