"""Finite abelian groups, their characters, and exact roots of unity.

A root of unity exp(2*pi*i*a/m) is stored as the reduced fraction a/m in Q/Z,
so every comparison is exact.  Characters of an abelian group are exponent
tuples against an invariant-factor basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, Sequence


@dataclass(frozen=True)
class RootOfUnity:
    num: int
    den: int = 1

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive")
        a = self.num % self.den
        g = gcd(a, self.den)
        object.__setattr__(self, "num", a // g)
        object.__setattr__(self, "den", self.den // g)

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        a, m = text.split("/")
        return cls(int(a), int(m))

    @property
    def order(self) -> int:
        return self.den

    @property
    def is_one(self) -> bool:
        return self.den == 1

    @property
    def is_minus_one(self) -> bool:
        return self.den == 2

    def in_R(self, n: int) -> bool:
        """Primitive n-th root of unity?"""
        return self.den == n

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        m = lcm(self.den, other.den)
        return RootOfUnity(self.num * (m // self.den) + other.num * (m // other.den), m)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.num * k, self.den)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.num, self.den)

    def __neg__(self) -> "RootOfUnity":
        return self * MINUS_ONE

    def sort_key(self):
        return (self.den, self.num)

    def __str__(self):
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"RootOfUnity({self.num}/{self.den})"


ONE = RootOfUnity(0, 1)
MINUS_ONE = RootOfUnity(1, 2)


def roots_of_unity(max_order: int) -> list[RootOfUnity]:
    """Every root of unity of order <= max_order, sorted by (order, numerator)."""
    return [RootOfUnity(a, m) for m in range(1, max_order + 1) for a in range(m) if gcd(a, m) == 1]


def invariant_factors(orders: Iterable[int]) -> list[int]:
    """Invariant factors d1 | d2 | ... of a direct sum of cyclic groups."""
    by_prime: dict[int, list[int]] = {}
    for m in orders:
        d = 2
        while m > 1:
            if m % d == 0:
                pk = 1
                while m % d == 0:
                    m //= d
                    pk *= d
                by_prime.setdefault(d, []).append(pk)
            d += 1
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, pk in enumerate(powers):
            factors[length - 1 - i] *= pk
    return factors


class AbelianStruct:
    """Invariant-factor decomposition of an explicitly listed abelian group.

    ``generators[i]`` has order ``factors[i]`` and ``factors`` is ascending
    under divisibility.  ``coords(x)`` gives the exponent tuple of x.
    """

    def __init__(self, elements: Sequence[Hashable], mul: Callable, identity: Hashable):
        self.elements = list(elements)
        self.mul = mul
        self.identity = identity
        if identity not in set(self.elements):
            raise ValueError("identity not among the elements")
        try:
            self.generators, self.factors = self._peel()
            self._coords = self._coordinate_map()
        except AssertionError as exc:
            raise ValueError(f"group is not abelian ({exc})") from None
        # every element is an ordered product of the generators, so pairwise
        # commuting generators make the whole group abelian
        for i, g in enumerate(self.generators):
            for h in self.generators[i + 1:]:
                if mul(g, h) != mul(h, g):
                    raise ValueError("group is not abelian")

    def _power(self, x, k):
        r, base = self.identity, x
        while k:
            if k & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            k >>= 1
        return r

    def _order_mod(self, x, sub: set) -> int:
        k, y = 1, x
        while y not in sub:
            y = self.mul(y, x)
            k += 1
        return k

    def _peel(self):
        """Repeatedly split off a cyclic summand of maximal order."""
        sub = {self.identity}
        gens, factors = [], []
        while len(sub) < len(self.elements):
            # element whose image in G/sub has maximal order (first in list order)
            best, best_ord = None, 0
            for x in self.elements:
                o = self._order_mod(x, sub)
                if o > best_ord:
                    best, best_ord = x, o
            # correct the lift so its order in G equals best_ord
            y = self._power(best, best_ord)
            h = self._find_root_in(sub, gens, factors, y, best_ord)
            g = self.mul(best, h)
            new_sub = set()
            p = self.identity
            for _ in range(best_ord):
                new_sub |= {self.mul(p, s) for s in sub}
                p = self.mul(p, g)
            if len(new_sub) != len(sub) * best_ord:
                raise AssertionError("cyclic summand meets the span")
            sub = new_sub
            gens.append(g)
            factors.append(best_ord)
        gens.reverse()
        factors.reverse()
        return gens, factors

    def _find_root_in(self, sub, gens, factors, y, e):
        """Find h in the span of ``gens`` with h^e = y^{-1}."""
        for exps in product(*(range(f) for f in factors)):
            h = self.identity
            for g, k in zip(gens, exps):
                h = self.mul(h, self._power(g, k))
            if self.mul(self._power(h, e), y) == self.identity:
                return h
        raise AssertionError("no complement correction found")

    def _coordinate_map(self):
        coords = {}
        powers = [[self._power(g, k) for k in range(f)] for g, f in zip(self.generators, self.factors)]
        for exps in product(*(range(f) for f in self.factors)):
            x = self.identity
            for pw, k in zip(powers, exps):
                x = self.mul(x, pw[k])
            if x in coords:
                raise AssertionError("generators are not independent")
            coords[x] = exps
        if len(coords) != len(self.elements):
            raise AssertionError("generators do not span the group")
        return coords

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def coords(self, x) -> tuple[int, ...]:
        try:
            return self._coords[x]
        except KeyError:
            raise ValueError(f"{x!r} is not in the group") from None

    def __contains__(self, x) -> bool:
        return x in self._coords


def abelian_structure(elements: Sequence[Hashable], mul: Callable, identity: Hashable) -> AbelianStruct:
    return AbelianStruct(elements, mul, identity)


@dataclass(frozen=True, eq=False)
class Character:
    group: AbelianStruct
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.group.factors):
            raise ValueError("exponent tuple length does not match the group rank")
        object.__setattr__(
            self, "exponents", tuple(k % d for k, d in zip(self.exponents, self.group.factors))
        )

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and other.group is self.group
            and other.exponents == self.exponents
        )

    def __hash__(self):
        return hash((id(self.group), self.exponents))

    def __call__(self, x) -> RootOfUnity:
        return self.at_coords(self.group.coords(x))

    def at_coords(self, c: Sequence[int]) -> RootOfUnity:
        e = self.group.exponent
        return RootOfUnity(sum(k * ci * (e // d) for k, ci, d in zip(self.exponents, c, self.group.factors)), e)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def to_json(self) -> dict:
        return {"factors": list(self.group.factors), "exponents": list(self.exponents)}


def char_eval(chi: Character, g) -> RootOfUnity:
    return chi(g)


def enumerate_characters(A: AbelianStruct) -> list[Character]:
    """All |A| characters, lexicographic in the exponent tuple (trivial first)."""
    return [Character(A, exps) for exps in product(*(range(d) for d in A.factors))]
