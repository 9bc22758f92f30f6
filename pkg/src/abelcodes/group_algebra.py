"""Exact arithmetic in F2[G] for finite abelian groups G.

A group element is a tuple of exponents, one entry per cyclic factor.  Ranks
are mixed-radix with the first factor least significant:

    rank(e) = sum(e[i] * prod(factor_orders[:i]))

An algebra element is an int used as a bitset: bit k is the coefficient of the
rank-k group element.  Addition is XOR, weight is a popcount, and squaring is
the doubling permutation on exponents.  This fixes a bit-exact export order:
serialized coefficients are the bitset as little-endian bytes, hex-encoded.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .gf2 import bit_indices

GroupElement = tuple[int, ...]

# Beyond this order, translation permutations are computed per call instead of cached.
_PERM_CACHE_MAX_ORDER = 4096


class AbelianGroup:
    """Finite abelian group given by the orders of its cyclic factors."""

    __slots__ = ("factor_orders", "order", "_places", "_elements", "_perm_cache")

    def __init__(self, factor_orders: Sequence[int]) -> None:
        orders = tuple(int(x) for x in factor_orders)
        if not orders or any(x < 2 for x in orders):
            raise ValueError("every cyclic factor order must be at least 2")
        self.factor_orders = orders
        places = []
        total = 1
        for x in orders:
            places.append(total)
            total *= x
        self.order = total
        self._places = tuple(places)
        self._elements: list[GroupElement] | None = None
        self._perm_cache: dict[GroupElement, array] | None = (
            {} if total <= _PERM_CACHE_MAX_ORDER else None
        )

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.factor_orders)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AbelianGroup) and self.factor_orders == other.factor_orders

    def __hash__(self) -> int:
        return hash(self.factor_orders)

    @property
    def is_odd(self) -> bool:
        return self.order % 2 == 1

    def identity(self) -> GroupElement:
        return (0,) * len(self.factor_orders)

    def generator(self, i: int) -> GroupElement:
        e = [0] * len(self.factor_orders)
        e[i] = 1
        return tuple(e)

    def reduce(self, exps: Sequence[int]) -> GroupElement:
        return tuple(x % n for x, n in zip(exps, self.factor_orders))

    def rank(self, e: GroupElement) -> int:
        return sum(x * w for x, w in zip(e, self._places))

    def unrank(self, r: int) -> GroupElement:
        return self._element_table()[r]

    def _element_table(self) -> list[GroupElement]:
        if self._elements is None:
            table = []
            for r in range(self.order):
                exps = []
                for n in self.factor_orders:
                    r, x = divmod(r, n)
                    exps.append(x)
                table.append(tuple(exps))
            self._elements = table
        return self._elements

    def elements(self) -> Iterator[GroupElement]:
        """All elements in rank order."""
        return iter(self._element_table())

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factor_orders))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % n for x, n in zip(a, self.factor_orders))

    def scale(self, a: GroupElement, k: int) -> GroupElement:
        """The power map a -> a**k, exponentwise."""
        return tuple(x * k % n for x, n in zip(a, self.factor_orders))

    def element_order(self, a: GroupElement) -> int:
        return math.lcm(*(n // math.gcd(x, n) for x, n in zip(a, self.factor_orders)))

    def translation_permutation(self, shift: GroupElement) -> array:
        """Permutation of ranks induced by adding `shift`."""
        cache = self._perm_cache
        if cache is not None:
            perm = cache.get(shift)
            if perm is not None:
                return perm
        table = self._element_table()
        perm = array("l", (self.rank(self.add(e, shift)) for e in table))
        if cache is not None:
            cache[shift] = perm
        return perm

    def translate_bits(self, bits: int, shift: GroupElement) -> int:
        perm = self.translation_permutation(shift)
        out = 0
        for k in bit_indices(bits):
            out |= 1 << perm[k]
        return out

    def permute_bits_by_scaling(self, bits: int, k: int) -> int:
        """Apply the power map g -> g**k to a support bitset."""
        out = 0
        table = self._element_table()
        for r in bit_indices(bits):
            out |= 1 << self.rank(self.scale(table[r], k))
        return out


@dataclass(frozen=True)
class AlgebraElement:
    """An element of F2[G], stored as a coefficient bitset in rank order."""

    group: AbelianGroup
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.group.order:
            raise ValueError("coefficient bitset out of range for the group")

    @classmethod
    def zero(cls, group: AbelianGroup) -> "AlgebraElement":
        return cls(group, 0)

    @classmethod
    def one(cls, group: AbelianGroup) -> "AlgebraElement":
        return cls(group, 1)

    @classmethod
    def all_ones(cls, group: AbelianGroup) -> "AlgebraElement":
        return cls(group, (1 << group.order) - 1)

    @classmethod
    def from_terms(cls, group: AbelianGroup, terms: Iterable[GroupElement]) -> "AlgebraElement":
        """Sum of the given group elements; repeated terms cancel in pairs."""
        bits = 0
        for t in terms:
            bits ^= 1 << group.rank(group.reduce(t))
        return cls(group, bits)

    @classmethod
    def monomial(cls, group: AbelianGroup, e: GroupElement) -> "AlgebraElement":
        return cls(group, 1 << group.rank(group.reduce(e)))

    def _require_same_group(self, other: "AlgebraElement") -> None:
        if self.group != other.group:
            raise ValueError("group mismatch between algebra elements")

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def augmentation(self) -> int:
        """Parity of the support size; a ring map onto F2."""
        return self.bits.bit_count() & 1

    def support_ranks(self) -> list[int]:
        return list(bit_indices(self.bits))

    def support(self) -> list[GroupElement]:
        return [self.group.unrank(r) for r in bit_indices(self.bits)]

    def contains(self, e: GroupElement) -> bool:
        return bool(self.bits >> self.group.rank(self.group.reduce(e)) & 1)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_same_group(other)
        return AlgebraElement(self.group, self.bits ^ other.bits)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Convolution over G: XOR a translated copy of the denser operand per support term."""
        self._require_same_group(other)
        g = self.group
        x, y = self.bits, other.bits
        if x.bit_count() > y.bit_count():
            x, y = y, x
        out = 0
        table = g._element_table()
        for r in bit_indices(x):
            out ^= g.translate_bits(y, table[r])
        return AlgebraElement(g, out)

    def frobenius(self) -> "AlgebraElement":
        """The square, computed as the exponent-doubling support permutation."""
        return AlgebraElement(self.group, self.group.permute_bits_by_scaling(self.bits, 2))

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = AlgebraElement.one(self.group)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base.frobenius()
        return result

    def translated(self, g: GroupElement) -> "AlgebraElement":
        """Multiplication by the group element g; a weight-preserving permutation."""
        shift = self.group.reduce(g)
        return AlgebraElement(self.group, self.group.translate_bits(self.bits, shift))

    def to_hex(self) -> str:
        """Bit-exact export: the bitset as little-endian bytes, hex encoded."""
        nbytes = (self.group.order + 7) // 8
        return self.bits.to_bytes(nbytes, "little").hex()

    @classmethod
    def from_hex(cls, group: AbelianGroup, text: str) -> "AlgebraElement":
        bits = int.from_bytes(bytes.fromhex(text), "little")
        return cls(group, bits)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by generators, with its element set enumerated."""

    group: AbelianGroup
    generators: tuple[GroupElement, ...]
    element_ranks: tuple[int, ...]

    @classmethod
    def from_generators(
        cls, group: AbelianGroup, generators: Iterable[GroupElement]
    ) -> "Subgroup":
        gens = tuple(group.reduce(g) for g in generators)
        seen = {group.rank(group.identity())}
        frontier = [group.identity()]
        while frontier:
            e = frontier.pop()
            for g in gens:
                f = group.add(e, g)
                r = group.rank(f)
                if r not in seen:
                    seen.add(r)
                    frontier.append(f)
        ranks = tuple(sorted(seen))
        if group.order % len(ranks) != 0:
            raise RuntimeError("closure size does not divide the group order")
        return cls(group=group, generators=gens, element_ranks=ranks)

    @classmethod
    def trivial(cls, group: AbelianGroup) -> "Subgroup":
        return cls.from_generators(group, ())

    @classmethod
    def whole(cls, group: AbelianGroup) -> "Subgroup":
        gens = [group.generator(i) for i in range(len(group.factor_orders))]
        return cls.from_generators(group, gens)

    @property
    def order(self) -> int:
        return len(self.element_ranks)

    def contains_rank(self, r: int) -> bool:
        return r in set(self.element_ranks)

    def elements(self) -> list[GroupElement]:
        return [self.group.unrank(r) for r in self.element_ranks]

    def hat(self) -> AlgebraElement:
        """Sum of all subgroup elements; an idempotent when the order is odd."""
        bits = 0
        for r in self.element_ranks:
            bits |= 1 << r
        return AlgebraElement(self.group, bits)


def cyclic_exponent(group: AbelianGroup, e: GroupElement) -> int:
    """Exponent of e as a power of a single generator, for coprime cyclic factors."""
    orders = group.factor_orders
    for i in range(len(orders)):
        for j in range(i + 1, len(orders)):
            if math.gcd(orders[i], orders[j]) != 1:
                raise ValueError("factors are not pairwise coprime; group is not cyclic")
    k, modulus = 0, 1
    for x, n in zip(e, orders):
        inv = pow(modulus % n, -1, n)
        k = k + modulus * ((x - k) * inv % n)
        modulus *= n
    return k % modulus


def as_cyclic(x: AlgebraElement) -> AlgebraElement:
    """Rewrite over the single-generator presentation C_n, n = |G|."""
    target = AbelianGroup([x.group.order])
    bits = 0
    for e in x.support():
        bits |= 1 << cyclic_exponent(x.group, e)
    return AlgebraElement(target, bits)


def from_cyclic_exponents(group: AbelianGroup, exponents: Iterable[int]) -> AlgebraElement:
    """Build an element of a coprime-factor group from single-generator exponents."""
    orders = group.factor_orders
    terms = [tuple(k % n for n in orders) for k in exponents]
    return AlgebraElement.from_terms(group, terms)


__all__ = [
    "GroupElement",
    "AbelianGroup",
    "AlgebraElement",
    "Subgroup",
    "cyclic_exponent",
    "as_cyclic",
    "from_cyclic_exponents",
]
