"""Computations in the unit groups U_N of the rings Z/p^N Z.

U_N is cyclic of order p^(N-1)(p-1) (Gauss).  This module computes element
orders, primitive roots, the cyclic subgroup generated by a multiplier, the
threshold level at which orders start gaining factors of p, and the finite
quotient of the full unit sphere by the closure of the multiplier's powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from sympy import factorint

from .errors import CapExceededError, InsufficientPrecisionError, NotAUnitError, RootOfUnityError
from .padic import (
    ExactInt,
    MultiplierSpec,
    Prime,
    TeichProduct,
    as_multiplier,
    as_prime,
    multiplier_precision,
    multiplier_residue,
)

DEFAULT_NR_CAP = 64


def group_size(p: int, level: int) -> int:
    """|U_N| = p^(N-1) (p-1)."""
    return p ** (level - 1) * (p - 1)


def _unit_residue(r: int | MultiplierSpec, p: int, level: int) -> int:
    if level < 1:
        raise InsufficientPrecisionError("level must be at least 1")
    # plain integers are residues here (1 included); the multiplier exclusions
    # of 0 and 1 apply to spec forms only
    residue = r % p**level if isinstance(r, int) else multiplier_residue(r, p, level)
    if residue % p == 0:
        raise NotAUnitError(f"{residue} is not a unit mod {p}")
    return residue


def unit_order(p: int | Prime, level: int, r: int | MultiplierSpec) -> int:
    """Smallest d >= 1 with r^d = 1 mod p^level.

    Starts from |U_N| and strips prime factors while the power stays 1; the
    exhaustive multiply-until-one search is kept separately as an oracle.
    """
    p = as_prime(p)
    residue = _unit_residue(r, p, level)
    modulus = p**level
    order = group_size(p, level)
    factors = dict(factorint(p - 1))
    if level > 1:
        factors[p] = factors.get(p, 0) + level - 1
    for q in factors:
        while order % q == 0 and pow(residue, order // q, modulus) == 1:
            order //= q
    return order


def unit_order_naive(p: int | Prime, level: int, r: int | MultiplierSpec) -> int:
    """Oracle for unit_order: multiply until the power returns to 1."""
    p = as_prime(p)
    residue = _unit_residue(r, p, level)
    modulus = p**level
    current = residue % modulus
    order = 1
    while current != 1:
        current = current * residue % modulus
        order += 1
    return order


def find_primitive_root(p: int | Prime, level: int) -> int:
    """Smallest positive residue generating U_level."""
    p = as_prime(p)
    target = group_size(p, level)
    for a in range(2, p**level):
        if a % p and unit_order(p, level, a) == target:
            return a
    raise RuntimeError("unreachable: U_N is cyclic, a generator exists")


def find_nr(p: int | Prime, r: int | MultiplierSpec, cap: int = DEFAULT_NR_CAP) -> int:
    """Smallest level M at which p divides the order of r in U_M.

    Beyond this threshold orders multiply by exactly p per level, so the
    value pins down all the asymptotic data of the multiplier.
    """
    p = as_prime(p)
    spec = as_multiplier(r)
    if isinstance(spec, TeichProduct) or (isinstance(spec, ExactInt) and spec.n == -1):
        raise RootOfUnityError("no threshold exists: r is a root of unity")
    known = multiplier_precision(spec)
    for level in range(1, cap + 1):
        if known is not None and level > known:
            raise InsufficientPrecisionError(
                f"threshold not visible within {known} known digits"
            )
        if unit_order(p, level, spec) % p == 0:
            return level
    raise CapExceededError(f"threshold not found below level cap {cap}")


@dataclass(frozen=True)
class CyclicSubgroup:
    """The subgroup of U_level generated by a single residue."""

    p: int
    level: int
    generator: int
    elements: tuple[int, ...]
    order: int

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, k: int) -> bool:
        return k % self.p**self.level in self.element_set


def subgroup(p: int | Prime, level: int, r: int | MultiplierSpec) -> CyclicSubgroup:
    """Enumerate the cyclic subgroup of U_level generated by r."""
    p = as_prime(p)
    residue = _unit_residue(r, p, level)
    modulus = p**level
    elements = [1]
    current = residue % modulus
    while current != 1:
        elements.append(current)
        current = current * residue % modulus
    return CyclicSubgroup(p, level, residue % modulus, tuple(sorted(elements)), len(elements))


def is_in_subgroup(p: int | Prime, level: int, r: int | MultiplierSpec, k: int) -> bool:
    """Whether k mod p^level lies in the subgroup generated by r."""
    p = as_prime(p)
    if k % p == 0:
        raise NotAUnitError(f"{k} is not a unit mod {p}")
    return k in subgroup(p, level, r)


@dataclass(frozen=True)
class QuotientGroup:
    """The quotient of U_level by a cyclic subgroup, with a fixed section.

    Coset representatives are the smallest positive residue in each coset,
    identity coset first; the multiplication table is indexed accordingly.
    The section maps coset j to the integer coset_reps[j].
    """

    p: int
    level: int
    subgroup: CyclicSubgroup
    coset_reps: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.coset_reps)

    @cached_property
    def _membership(self) -> dict[int, int]:
        modulus = self.p**self.level
        out: dict[int, int] = {}
        for index, rep in enumerate(self.coset_reps):
            for g in self.subgroup.elements:
                out[rep * g % modulus] = index
        return out

    def coset_index(self, k: int) -> int:
        """Index of the coset containing the unit k."""
        if k % self.p == 0:
            raise NotAUnitError(f"{k} is not a unit mod {self.p}")
        return self._membership[k % self.p**self.level]

    def section(self, index: int) -> int:
        return self.coset_reps[index]


def quotient_group(
    p: int | Prime, r: int | MultiplierSpec, cap: int = DEFAULT_NR_CAP
) -> QuotientGroup:
    """The finite quotient of the unit sphere by the closed group of powers of r.

    Computed at the threshold level, where it stabilizes: reading the quotient
    at any higher level gives a canonically isomorphic group.
    """
    p = as_prime(p)
    level = find_nr(p, r, cap)
    sub = subgroup(p, level, r)
    modulus = p**level
    membership: dict[int, int] = {}
    reps: list[int] = []
    for k in range(1, modulus):
        if k % p == 0 or k in membership:
            continue
        index = len(reps)
        reps.append(k)
        for g in sub.elements:
            membership[k * g % modulus] = index
    table = tuple(
        tuple(membership[a * b % modulus] for b in reps) for a in reps
    )
    return QuotientGroup(p, level, sub, tuple(reps), table)
