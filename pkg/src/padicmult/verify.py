"""Named property suites: every algebraic law the library promises, checked
with exact arithmetic against independent oracles where one exists.

The suites power the `verify` CLI command and the acceptance tests.  All
randomness is drawn from per-property seeded generators, so identical bounds
and seed give byte-identical reports.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .classification import CaseII, classify, h_contains, HSubgroup, supernatural_order
from .errors import DomainError
from .functions import LocallyConstantFn, alpha_endo, beta_endo, same_function
from .ktheory import (
    C0SeqH,
    C0SeqZ,
    C0SeqZpZ,
    CFunUnits,
    Free,
    KGroupDescriptor,
    algebra_k_groups,
    hs_k_groups,
    ideal_k_groups,
    primed_algebra_k_groups,
)
from .operators import NonNeg, TruncatedOp, WinZ
from .padic import ExactInt, MultiplierSpec, TeichProduct, as_multiplier, teichmuller, valuation
from .representations import (
    build_cyclic_rep,
    build_digit_rep,
    build_hs_rep,
    build_orbit_rep,
    canonical_words,
    check_covariance,
    check_matrix_units,
    digit_expand,
    intertwiner,
    kappa,
    orbit_decompose,
    pi0_symbol,
    present_product,
    shift_word,
    symbol_product,
    symbol_vanishes,
    word_key,
    word_value,
)
from .scalars import Scalar
from .unit_groups import (
    find_nr,
    find_primitive_root,
    group_size,
    quotient_group,
    subgroup,
    unit_order,
    unit_order_naive,
)

PRIMES = (3, 5, 7)


@dataclass
class Bounds:
    """Knobs for the property suites; the defaults finish in seconds."""

    max_p: int = 7
    max_level: int = 5
    max_len: int = 4
    window: int = 8
    seed: int = 0
    endo_samples: int = 200
    covariance_samples: int = 100
    symbol_samples: int = 50
    nr_cap: int = 10
    p: int | None = None
    r: MultiplierSpec | None = None
    function: LocallyConstantFn | None = None


@dataclass
class PropertyResult:
    """Pass/fail tally for one named property."""

    suite: str
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, detail: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(detail)


def _rng(bounds: Bounds, tag: str) -> random.Random:
    return random.Random(f"{bounds.seed}:{tag}")


def _primes(bounds: Bounds) -> list[int]:
    return [p for p in PRIMES if p <= bounds.max_p]


def _pool(bounds: Bounds) -> list[tuple[int, int]]:
    """Every (p, r) with r in {2..p^2} coprime to p."""
    return [(p, r) for p in _primes(bounds) for r in range(2, p * p + 1) if r % p]


def random_scalar(rng: random.Random) -> Scalar:
    real = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    imag = Fraction(rng.randint(-2, 2), rng.randint(1, 2)) if rng.random() < 0.3 else Fraction(0)
    return Scalar(real, imag)


def random_function(rng: random.Random, p: int, max_level: int) -> LocallyConstantFn:
    level = rng.randint(0, max_level)
    return LocallyConstantFn(p, level, tuple(random_scalar(rng) for _ in range(p**level)))


# --- suites ----------------------------------------------------------------------


def suite_orders(bounds: Bounds) -> list[PropertyResult]:
    agree = PropertyResult("orders", "fast-path-matches-oracle")
    double = PropertyResult("orders", "order-doubling-past-threshold")
    thresh = PropertyResult("orders", "threshold-matches-oracle")
    divides = PropertyResult("orders", "orders-divide-upward")
    for p, r in _pool(bounds):
        top = bounds.max_level + 1
        oracle = {level: unit_order_naive(p, level, r) for level in range(1, top + 1)}
        for level in range(1, top + 1):
            agree.check(
                unit_order(p, level, r) == oracle[level],
                f"unit_order({p},{level},{r}) != oracle",
            )
        threshold = find_nr(p, r, cap=bounds.nr_cap)
        oracle_threshold = next(
            (m for m in range(1, top + 1) if oracle[m] % p == 0), None
        )
        thresh.check(
            threshold == oracle_threshold, f"threshold mismatch for p={p}, r={r}"
        )
        if oracle_threshold is None:
            continue
        for level in range(threshold, top):
            double.check(
                oracle[level + 1] == p * oracle[level],
                f"doubling fails at p={p}, r={r}, level={level}",
            )
        for level in range(1, top):
            divides.check(
                oracle[level + 1] % oracle[level] == 0,
                f"divisibility fails at p={p}, r={r}, level={level}",
            )
    return [agree, thresh, double, divides]


def suite_subgroups(bounds: Bounds) -> list[PropertyResult]:
    lifting = PropertyResult("subgroups", "lifting-by-exhaustion")
    sizes = PropertyResult("subgroups", "subgroup-order-divides-group")
    roots = PropertyResult("subgroups", "primitive-root-lifting")
    for p, r in _pool(bounds):
        threshold = find_nr(p, r, cap=bounds.nr_cap)
        for level in range(threshold, min(bounds.max_level, 4) + 1):
            low = subgroup(p, level, r)
            high = subgroup(p, level + 1, r)
            modulus = p**level
            lifted = {
                k
                for k in range(1, p ** (level + 1))
                if k % p and k % modulus in low.element_set
            }
            lifting.check(
                high.element_set == frozenset(lifted),
                f"lift mismatch at p={p}, r={r}, level={level}",
            )
        for level in range(1, min(bounds.max_level, 4) + 1):
            sub = subgroup(p, level, r)
            sizes.check(
                len(sub.elements) == sub.order and group_size(p, level) % sub.order == 0,
                f"order bookkeeping broken at p={p}, r={r}, level={level}",
            )
    for p in _primes(bounds):
        a = find_primitive_root(p, 1)
        lifts = {a, a + p}
        roots.check(
            any(unit_order(p, 2, b) == group_size(p, 2) for b in lifts),
            f"neither {a} nor {a + p} generates level 2 for p={p}",
        )
        b = find_primitive_root(p, 2)
        for level in range(2, bounds.max_level + 1):
            roots.check(
                unit_order(p, level, b) == group_size(p, level),
                f"level-2 generator stops generating at level {level} for p={p}",
            )
    return [lifting, sizes, roots]


def _is_group_table(table: tuple[tuple[int, ...], ...]) -> bool:
    n = len(table)
    if any(len(row) != n for row in table):
        return False
    if any(table[0][j] != j or table[j][0] != j for j in range(n)):
        return False
    for row in table:
        if sorted(row) != list(range(n)):
            return False
    for j in range(n):
        if sorted(table[i][j] for i in range(n)) != list(range(n)):
            return False
    if any(0 not in row for row in table):
        return False
    return all(
        table[table[i][j]][k] == table[i][table[j][k]]
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )


def suite_quotients(bounds: Bounds) -> list[PropertyResult]:
    stable = PropertyResult("quotients", "index-stable-past-threshold")
    spot = PropertyResult("quotients", "spot-quotient-orders")
    axioms = PropertyResult("quotients", "table-satisfies-group-axioms")
    for p, r in _pool(bounds):
        threshold = find_nr(p, r, cap=bounds.nr_cap)
        indexes = {
            group_size(p, level) // unit_order(p, level, r)
            for level in range(threshold, bounds.max_level + 2)
        }
        stable.check(len(indexes) == 1, f"index drifts for p={p}, r={r}: {sorted(indexes)}")
        quotient = quotient_group(p, r, cap=bounds.nr_cap)
        stable.check(
            quotient.order * quotient.subgroup.order == group_size(p, quotient.level),
            f"coset count mismatch for p={p}, r={r}",
        )
        axioms.check(
            _is_group_table(quotient.table) and quotient.coset_reps[0] == 1,
            f"table axioms fail for p={p}, r={r}",
        )
    if 3 <= bounds.max_p:
        spot.check(quotient_group(3, 2).order == 1, "quotient order at (3, 2)")
    if 5 <= bounds.max_p:
        spot.check(quotient_group(5, 7).order == 5, "quotient order at (5, 7)")
        spot.check(quotient_group(5, 2).order == 1, "quotient order at (5, 2)")
    return [stable, spot, axioms]


def teichmuller_fixed_point(p: int, i: int, precision: int) -> int:
    """Oracle for the root-of-unity lift: iterate a -> a^p until it stabilizes."""
    modulus = p**precision
    current = i % modulus
    while True:
        following = pow(current, p, modulus)
        if following == current:
            return current
        current = following


def suite_teich(bounds: Bounds) -> list[PropertyResult]:
    agree = PropertyResult("teich", "closed-form-matches-fixed-point-oracle")
    laws = PropertyResult("teich", "root-of-unity-laws")
    compat = PropertyResult("teich", "reduction-compatibility")
    distinct = PropertyResult("teich", "distinct-mod-p")
    for p in _primes(bounds):
        for precision in range(1, bounds.max_level + 1):
            modulus = p**precision
            lifts = {}
            for i in range(1, p):
                w = teichmuller(p, i, precision)
                lifts[i] = w
                agree.check(
                    w == teichmuller_fixed_point(p, i, precision),
                    f"oracle mismatch at p={p}, i={i}, precision={precision}",
                )
                laws.check(
                    pow(w, p - 1, modulus) == 1 and w % p == i and pow(w, p, modulus) == w,
                    f"root laws fail at p={p}, i={i}, precision={precision}",
                )
                for lower in range(1, precision + 1):
                    compat.check(
                        w % p**lower == teichmuller(p, i, lower),
                        f"reduction breaks at p={p}, i={i}, {precision}->{lower}",
                    )
            laws.check(
                lifts[p - 1] == modulus - 1,
                f"lift of p-1 is not -1 at p={p}, precision={precision}",
            )
            distinct.check(
                len({w % p for w in lifts.values()}) == p - 1,
                f"collision mod p at p={p}, precision={precision}",
            )
    return [agree, laws, compat, distinct]


def _endo_configs(bounds: Bounds) -> list[tuple[int, MultiplierSpec]]:
    configs: list[tuple[int, MultiplierSpec]] = []
    for p, spec in (
        (3, ExactInt(2)),
        (5, ExactInt(7)),
        (7, ExactInt(3)),
        (5, TeichProduct(2)),
        (3, ExactInt(-1)),
        (7, TeichProduct(3, -1)),
        (3, ExactInt(6)),
        (5, ExactInt(50)),
        (7, ExactInt(-21)),
    ):
        if p <= bounds.max_p:
            configs.append((p, spec))
    return configs


def suite_endos(bounds: Bounds) -> list[PropertyResult]:
    section = PropertyResult("endos", "beta-after-alpha-is-identity")
    inverse = PropertyResult("endos", "alpha-after-beta-is-identity-for-units")
    rng = _rng(bounds, "endos")
    configs = _endo_configs(bounds)
    for sample in range(bounds.endo_samples):
        p, spec = configs[sample % len(configs)]
        f = bounds.function or random_function(rng, p, max_level=2)
        if bounds.function is not None and f.p != p:
            continue
        level_r = valuation(p, spec.n)[0] if isinstance(spec, ExactInt) else 0
        back = beta_endo(alpha_endo(f, spec), spec)
        section.check(
            back.values == f.refined(f.level + level_r).values and same_function(back, f),
            f"beta(alpha(f)) != f for p={p}, r={spec}",
        )
        if level_r == 0:
            forth = alpha_endo(beta_endo(f, spec), spec)
            inverse.check(
                forth.values == f.values,
                f"alpha(beta(f)) != f for p={p}, r={spec}",
            )
    return [section, inverse]


def suite_reps(bounds: Bounds) -> list[PropertyResult]:
    results = []
    results.extend(_reps_covariance(bounds))
    results.extend(_reps_unitarity(bounds))
    results.append(_reps_periodicity(bounds))
    results.append(_reps_matrix_units(bounds))
    results.extend(_reps_symbols(bounds))
    results.append(_reps_decompose(bounds))
    return results


def _reps_covariance(bounds: Bounds) -> list[PropertyResult]:
    orbit = PropertyResult("reps", "covariance-orbit-window")
    cyclic = PropertyResult("reps", "covariance-cyclic")
    digit = PropertyResult("reps", "covariance-digit-words")
    index = PropertyResult("reps", "covariance-index-shift")
    rng = _rng(bounds, "covariance")
    orbit_configs = [(3, ExactInt(2), 1), (5, ExactInt(7), 2)]
    cyclic_configs = [(5, TeichProduct(2), 1), (7, TeichProduct(3), 3)]
    digit_configs = [(3, ExactInt(6), 1), (5, ExactInt(10), 1)]
    hs_configs = [(3, 1), (5, 1), (3, 2)]
    for sample in range(bounds.covariance_samples):
        p, spec, x = orbit_configs[sample % len(orbit_configs)]
        if p <= bounds.max_p:
            f = bounds.function or random_function(rng, p, 2)
            shift, diag = build_orbit_rep(p, spec, x, f, window=bounds.window)
            _, diag_alpha = build_orbit_rep(p, spec, x, alpha_endo(f, spec), window=bounds.window)
            orbit.check(
                check_covariance(shift, diag, diag_alpha),
                f"orbit covariance fails at p={p}, r={spec}, sample={sample}",
            )
        p, spec, x = cyclic_configs[sample % len(cyclic_configs)]
        if p <= bounds.max_p:
            f = bounds.function or random_function(rng, p, 2)
            shift, diag = build_cyclic_rep(p, spec, x, f)
            _, diag_alpha = build_cyclic_rep(p, spec, x, alpha_endo(f, spec))
            cyclic.check(
                check_covariance(shift, diag, diag_alpha, interior=shift.codomain),
                f"cyclic covariance fails at p={p}, r={spec}, sample={sample}",
            )
        p, spec, level = digit_configs[sample % len(digit_configs)]
        if p <= bounds.max_p:
            f = bounds.function or random_function(rng, p, 2)
            max_len = min(bounds.max_len, 3)
            shift, diag = build_digit_rep(p, level, spec, f, max_len)
            _, diag_alpha = build_digit_rep(p, level, spec, alpha_endo(f, spec), max_len)
            digit.check(
                check_covariance(shift, diag, diag_alpha, interior=shift.domain),
                f"digit covariance fails at p={p}, r={spec}, sample={sample}",
            )
        p, level = hs_configs[sample % len(hs_configs)]
        if p <= bounds.max_p:
            f = bounds.function or random_function(rng, p, 2)
            shift, diag = build_hs_rep(p, level, f, cutoff=40)
            alpha_f = alpha_endo(f, ExactInt(p**level))
            diag_alpha = TruncatedOp.diagonal(shift.codomain, lambda ix: alpha_f(ix.l))
            index.check(
                check_covariance(shift, diag, diag_alpha, interior=shift.codomain),
                f"index-shift covariance fails at p={p}, level={level}, sample={sample}",
            )
    return [orbit, cyclic, digit, index]


def _reps_unitarity(bounds: Bounds) -> list[PropertyResult]:
    isometry = PropertyResult("reps", "shift-sections-are-isometries")
    unitary = PropertyResult("reps", "cyclic-shift-is-unitary")
    constant = LocallyConstantFn.constant
    for p, spec, x in ((3, ExactInt(2), 1), (5, ExactInt(7), 1)):
        if p > bounds.max_p:
            continue
        shift, _ = build_orbit_rep(p, spec, x, constant(p, 1), window=bounds.window)
        isometry.check(
            shift.adjoint() @ shift == TruncatedOp.identity(shift.domain),
            f"orbit shift not isometric at p={p}",
        )
        fixed = shift.range_fixed_points()
        isometry.check(
            set(fixed) == {WinZ(k) for k in range(-bounds.window + 1, bounds.window + 2)},
            f"range projection has the wrong fixed set at p={p}",
        )
    for p, level in ((3, 1), (5, 1)):
        if p > bounds.max_p:
            continue
        shift, _ = build_hs_rep(p, level, constant(p, 1), cutoff=20)
        isometry.check(
            shift.adjoint() @ shift == TruncatedOp.identity(shift.domain),
            f"index shift not isometric at p={p}",
        )
        word_shift, _ = build_digit_rep(p, level, ExactInt(2 * p**level), constant(p, 1), 3)
        isometry.check(
            word_shift.adjoint() @ word_shift == TruncatedOp.identity(word_shift.domain),
            f"digit shift not isometric at p={p}",
        )
    for p, spec in ((5, TeichProduct(2)), (7, TeichProduct(3))):
        if p > bounds.max_p:
            continue
        shift, _ = build_cyclic_rep(p, spec, 1, constant(p, 1))
        identity = TruncatedOp.identity(shift.domain)
        unitary.check(
            shift @ shift.adjoint() == identity and shift.adjoint() @ shift == identity,
            f"cyclic shift not unitary at p={p}",
        )
    return [isometry, unitary]


def _reps_periodicity(bounds: Bounds) -> PropertyResult:
    period = PropertyResult("reps", "orbit-diagonal-period-is-subgroup-order")
    if bounds.max_p < 5:
        return period
    window = 24
    for level in (1, 2, 3):
        f = LocallyConstantFn(5, level, tuple(Scalar.of(j) for j in range(5**level)))
        _, diag = build_orbit_rep(5, ExactInt(7), 1, f, window=window)
        sequence = {ix.k: diag.entries.get((ix, ix), Scalar()) for ix in diag.domain}
        d = unit_order(5, level, 7)
        repeats = all(
            sequence[k + d] == sequence[k] for k in range(-window, window - d + 1)
        )
        minimal = all(
            any(
                sequence[k + e] != sequence[k]
                for k in range(-window, window - e + 1)
            )
            for e in range(1, d)
            if d % e == 0
        )
        period.check(
            repeats and minimal and d <= window,
            f"period at level {level} is not {d}",
        )
    return period


def _reps_matrix_units(bounds: Bounds) -> PropertyResult:
    units = PropertyResult("reps", "matrix-unit-form-of-the-shift")
    for p, spec in ((5, TeichProduct(2)), (7, TeichProduct(3))):
        if p > bounds.max_p:
            continue
        units.check(check_matrix_units(p, spec), f"matrix-unit identity fails at p={p}")
    return units


def _random_presentation(rng: random.Random, p: int, vanish: bool) -> list:
    terms = []
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(-3, 3)
        f = random_function(rng, p, 2)
        if vanish:
            values = list(f.values)
            values[0] = Scalar()
            f = LocallyConstantFn(p, f.level, tuple(values))
        terms.append((n, f))
    return terms


def _reps_symbols(bounds: Bounds) -> list[PropertyResult]:
    membership = PropertyResult("reps", "symbol-vanishes-iff-coefficients-do")
    multiplicative = PropertyResult("reps", "symbol-of-product-is-product-of-symbols")
    rng = _rng(bounds, "symbols")
    p, spec = 3, ExactInt(2)
    if p > bounds.max_p:
        return [membership, multiplicative]
    for sample in range(bounds.symbol_samples):
        vanish = sample % 2 == 0
        terms = _random_presentation(rng, p, vanish)
        symbol = pi0_symbol(terms)
        expected = all(not f(0) for _, f in terms)
        membership.check(
            symbol_vanishes(symbol) == expected,
            f"membership mismatch at sample {sample}",
        )
        other = _random_presentation(rng, p, vanish=False)
        product_symbol = pi0_symbol(present_product(terms, other, p, spec))
        multiplicative.check(
            product_symbol == symbol_product(symbol, pi0_symbol(other)),
            f"symbol product mismatch at sample {sample}",
        )
        if expected:
            # folding frequencies cannot resurrect an element of the ideal
            folded = pi0_symbol(terms, modulus=4)
            membership.check(
                len(folded) == 4 and symbol_vanishes(folded),
                f"folded symbol of an ideal element does not vanish at sample {sample}",
            )
    return [membership, multiplicative]


def _reps_decompose(bounds: Bounds) -> PropertyResult:
    roundtrip = PropertyResult("reps", "orbit-decomposition-roundtrip")
    rng = _rng(bounds, "decompose")
    configs = [
        (3, ExactInt(2)),
        (5, ExactInt(7)),
        (5, TeichProduct(2)),
        (7, TeichProduct(3, -1)),
    ]
    precision = 5
    for sample in range(60):
        p, spec = configs[sample % len(configs)]
        if p > bounds.max_p:
            continue
        x = rng.randint(1, 5000) * rng.choice((1, -1))
        dec = orbit_decompose(p, spec, x, precision=precision)
        modulus = p ** (dec.p_exponent + precision)
        roundtrip.check(
            dec.recompose(spec) % modulus == x % modulus,
            f"recomposition mismatch for p={p}, r={spec}, x={x}",
        )
        if dec.case == "I":
            ok = all(
                dec.tail % p**m in subgroup(p, m, spec).element_set
                for m in range(1, min(precision, 4) + 1)
            )
            roundtrip.check(ok, f"tail escapes the subgroup tower for p={p}, x={x}")
        else:
            roundtrip.check(dec.tail % p == 1, f"tail not 1 mod p for p={p}, x={x}")
    return roundtrip


def suite_digits(bounds: Bounds) -> list[PropertyResult]:
    bijection = PropertyResult("digits", "words-biject-onto-residues")
    grading = PropertyResult("digits", "digit-shift-raises-kappa")
    partial = PropertyResult("digits", "partial-sums-match-mod-powers")
    intertwine = PropertyResult("digits", "index-shift-conjugates-to-digit-shift")
    diagonal = PropertyResult("digits", "conjugated-diagonal-matches-composition")
    rng = _rng(bounds, "digits")
    if bounds.p is not None or bounds.r is not None:
        if bounds.p is None or bounds.r is None:
            raise DomainError("pin both p and r for the digits suite, or neither")
        spec = as_multiplier(bounds.r)
        if not isinstance(spec, ExactInt):
            raise DomainError("the digits suite needs an exact integer multiplier")
        configs = [(bounds.p, spec.n)]
    else:
        configs = [(3, 6), (5, 10)]
    max_len = min(bounds.max_len, 3)
    for p, r in configs:
        if p > bounds.max_p:
            continue
        level = valuation(p, r)[0]
        s = p**level
        for n in range(1, max_len + 1):
            modulus = p ** (n * level)
            values = {
                sum(d * r**i for i, d in enumerate(word)) % modulus
                for word in itertools.product(range(s), repeat=n)
            }
            bijection.check(
                len(values) == modulus,
                f"length-{n} words miss residues for p={p}, r={r}",
            )
        for word in canonical_words(s, max_len):
            expansion = digit_expand(p, level, r, word_value(word, r), max_len)
            bijection.check(
                expansion.exact and expansion.word == word,
                f"expansion does not invert the value map at {word}",
            )
            if not word.is_zero():
                grading.check(
                    kappa(shift_word(word)) == kappa(word) + 1,
                    f"grading fails at {word}",
                )
        for _ in range(20):
            x = rng.randint(0, 10**6)
            expansion = digit_expand(p, level, r, x, max_len)
            digits = expansion.digits
            ok = all(
                sum(d * r**i for i, d in enumerate(digits[:n])) % p ** (n * level)
                == x % p ** (n * level)
                for n in range(1, len(digits) + 1)
            )
            partial.check(ok, f"partial sums drift for p={p}, r={r}, x={x}")
        pairing = intertwiner(p, level, r, max_len)
        pairing_up = intertwiner(p, level, r, max_len + 1)
        constant = LocallyConstantFn.constant(p, 1)
        index_shift, _ = build_hs_rep(p, level, constant, cutoff=s**max_len - 1)
        index_shift = index_shift.extended(
            codomain=tuple(NonNeg(l) for l in range(s ** (max_len + 1)))
        )
        word_shift, _ = build_digit_rep(p, level, ExactInt(r), constant, max_len)
        intertwine.check(
            pairing_up @ index_shift == word_shift @ pairing,
            f"intertwining fails for p={p}, r={r}",
        )
        identity = TruncatedOp.identity(pairing.domain)
        intertwine.check(
            pairing.adjoint() @ pairing == identity
            and pairing @ pairing.adjoint() == TruncatedOp.identity(pairing.codomain),
            f"pairing is not a permutation for p={p}, r={r}",
        )
        for _ in range(10):
            f = bounds.function or random_function(rng, p, 2)
            if f.p != p:
                continue
            mu = TruncatedOp.diagonal(pairing.domain, lambda ix: f(ix.l))
            conjugated = pairing @ mu @ pairing.adjoint()
            direct = TruncatedOp.diagonal(pairing.codomain, lambda w: f(word_key(w, s)))
            diagonal.check(
                conjugated == direct, f"conjugated diagonal mismatch for p={p}, r={r}"
            )
    return [bijection, grading, partial, intertwine, diagonal]


def suite_ktheory(bounds: Bounds) -> list[PropertyResult]:
    strings = PropertyResult("ktheory", "descriptor-strings")
    split = PropertyResult("ktheory", "split-sequence-consistency")
    canonical = PropertyResult("ktheory", "canonicalization-idempotent")
    household = PropertyResult("ktheory", "denominator-group-closure")
    rng = _rng(bounds, "ktheory")

    verdict = classify(3, 2)
    k0, k1 = algebra_k_groups(verdict, 3)
    strings.check(str(k0) == "c0(Z>=0, H(2*3^inf)) (+) Z", f"K0 printed as {k0}")
    strings.check(str(k1) == "Z (+) c0(Z>=0, Z)", f"K1 printed as {k1}")
    if bounds.max_p >= 5:
        prime_verdict = classify(5, TeichProduct(2))
        pk0, pk1 = primed_algebra_k_groups(prime_verdict, 5)
        strings.check(str(pk0) == "c0(Z>=0 x Zp, Z) (+) Z^4", f"primed K0 printed as {pk0}")
        strings.check(str(pk1) == "0", f"primed K1 printed as {pk1}")
        hs0, hs1 = algebra_k_groups(classify(5, 10), 5)
        strings.check(str(hs0) == "C(Z_5^x, Z)" and str(hs1) == "0", f"got {hs0} / {hs1}")
    hs0, hs1 = algebra_k_groups(classify(3, 6), 3)
    strings.check(str(hs0) == "C(Z_3^x, Z)" and str(hs1) == "0", f"got {hs0} / {hs1}")
    strings.check(
        algebra_k_groups(classify(3, 18), 3) == hs_k_groups(9),
        "valuation-2 descriptors disagree with the direct construction",
    )

    cases = [(3, ExactInt(2)), (5, ExactInt(7)), (5, TeichProduct(2)), (3, ExactInt(-1))]
    for p, spec in cases:
        if p > bounds.max_p:
            continue
        verdict = classify(p, spec)
        ak0, ak1 = algebra_k_groups(verdict, p)
        ik0, ik1 = ideal_k_groups(verdict, p)
        split.check(
            ak0 == ik0 + Free(1) and ak1 == ik1 + Free(1),
            f"unsplit descriptors at p={p}, r={spec}",
        )
        if isinstance(verdict, CaseII):
            pk0, pk1 = primed_algebra_k_groups(verdict, p)
            jk0, jk1 = ideal_k_groups(verdict, p, primed=True)
            split.check(
                pk0 == jk0 + Free(verdict.order) and pk1.is_zero() and jk1.is_zero(),
                f"primed split fails at p={p}, r={spec}",
            )

    atoms = [Free(1), Free(3), C0SeqZ(), C0SeqZpZ(), CFunUnits(9)]
    s = supernatural_order(3, 2)
    atoms.append(C0SeqH(s))
    for _ in range(25):
        chosen = [rng.choice(atoms) for _ in range(rng.randint(0, 5))]
        once = KGroupDescriptor(chosen)
        canonical.check(
            KGroupDescriptor(once.atoms) == once and str(KGroupDescriptor(once.atoms)) == str(once),
            f"canonicalization not idempotent on {chosen}",
        )

    h = HSubgroup(s)
    for _ in range(40):
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 30))
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 30))
        if h_contains(h, a) and h_contains(h, b):
            household.check(
                h_contains(h, a + b) and h_contains(h, a - b) and h_contains(h, -a),
                f"closure fails at {a}, {b}",
            )
        household.check(h_contains(h, rng.randint(-100, 100)), "integers must belong")
    return [strings, split, canonical, household]


SUITES = {
    "orders": suite_orders,
    "subgroups": suite_subgroups,
    "quotients": suite_quotients,
    "teich": suite_teich,
    "endos": suite_endos,
    "reps": suite_reps,
    "digits": suite_digits,
    "ktheory": suite_ktheory,
}


def run_suites(
    names: list[str], bounds: Bounds, parallel: bool = False
) -> list[PropertyResult]:
    """Run the named suites and aggregate results in a fixed order."""
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise DomainError(f"unknown suites: {', '.join(unknown)}")
    ordered = [n for n in SUITES if n in names]
    if parallel and len(ordered) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=len(ordered)) as pool:
            chunks = list(pool.map(lambda n: SUITES[n](bounds), ordered))
    else:
        chunks = [SUITES[n](bounds) for n in ordered]
    return [result for chunk in chunks for result in chunk]
