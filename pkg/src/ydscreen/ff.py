"""Exact arithmetic in F_q = F_p[s]/(m(s)) and in its quadratic extension.

Elements of F_q are coefficient tuples ``(c0, ..., c_{n-1})`` read from the
constant term upward.  The quadratic extension E = F_q[t]/(t^2 + m1 t + m0)
stores pairs ``u + v t`` with ``u, v`` in F_q, so F_q embeds coefficient-wise.

Every element also carries an integer *label* whose numeric order equals the
lexicographic order of its coefficient tuple; the matrix-group code works on
labels and lookup tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Sequence

import numpy as np

ENUM_BOUND = 32


class BoundError(ValueError):
    """A configured enumeration bound was exceeded."""


class FieldMismatchError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**n``; raise ``ValueError`` if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, n


def divisors(m: int) -> list[int]:
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


# -- polynomials over Z_p, constant term first ------------------------------

def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over Z_p."""
    r = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c:
            for j in range(dm + 1):
                r[i - dm + j] = (r[i - dm + j] - c * m[j]) % p
    return _trim(r[:dm])


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not poly_rem(poly, low + (1,), p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree n over Z_p."""
    if not is_prime(p) or n < 1:
        raise ValueError(f"invalid field parameters p={p}, n={n}")
    for low in product(range(p), repeat=n):
        cand = low + (1,)
        if n == 1 or is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- F_q --------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.n < 1:
            raise ValueError(f"degree n={self.n} must be positive")
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.n))
        else:
            mod = tuple(int(c) % self.p for c in self.modulus)
            if len(mod) != self.n + 1 or mod[-1] != 1:
                raise ValueError(f"modulus {list(self.modulus)} is not monic of degree {self.n}")
            if not is_irreducible(mod, self.p):
                raise ValueError(f"modulus {list(self.modulus)} is reducible over Z_{self.p}")
            object.__setattr__(self, "modulus", mod)

    @classmethod
    def of_order(cls, q: int, modulus: Sequence[int] | None = None) -> "FieldSpec":
        p, n = prime_power(q)
        return cls(p, n, tuple(modulus) if modulus is not None else None)

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def prime_field(self) -> "FieldSpec":
        return FieldSpec(self.p, 1)

    def __call__(self, value) -> "FqElem":
        return self.elem(value)

    def elem(self, value) -> "FqElem":
        """Build an element from an integer (prime-subfield residue) or coefficients."""
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldMismatchError("element belongs to another field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.n - 1)
        else:
            coeffs = tuple(int(c) % self.p for c in value)
            if len(coeffs) > self.n:
                raise ValueError(f"too many coefficients for F_{self.q}")
            coeffs += (0,) * (self.n - len(coeffs))
        return FqElem(coeffs, self)

    def from_label(self, label: int) -> "FqElem":
        coeffs = []
        for _ in range(self.n):
            label, r = divmod(label, self.p)
            coeffs.append(r)
        return FqElem(tuple(reversed(coeffs)), self)

    @property
    def zero(self) -> "FqElem":
        return self.elem(0)

    @property
    def one(self) -> "FqElem":
        return self.elem(1)

    @property
    def gen(self) -> "FqElem":
        """The class of s in F_p[s]/(m(s))."""
        return self.elem((0, 1)) if self.n > 1 else self.elem(-self.modulus[0])

    @cached_property
    def elements(self) -> tuple["FqElem", ...]:
        return tuple(self.from_label(i) for i in range(self.q))

    @cached_property
    def tables(self) -> "FieldTables":
        return FieldTables(self)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={list(self.modulus)})"


def enumerate_field(spec: FieldSpec, bound: int = ENUM_BOUND) -> list["FqElem"]:
    if spec.q > bound:
        raise BoundError(f"q={spec.q} exceeds enumeration bound {bound}")
    return list(spec.elements)


@dataclass(frozen=True)
class FqElem:
    coeffs: tuple[int, ...]
    field: FieldSpec

    def _check(self, other) -> "FqElem":
        if isinstance(other, int):
            return self.field.elem(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        return other

    @property
    def label(self) -> int:
        v = 0
        for c in self.coeffs:
            v = v * self.field.p + c
        return v

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FqElem(tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), self.field)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(tuple(-a % p for a in self.coeffs), self.field)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f, p = self.field, self.field.p
        prod = [0] * (2 * f.n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return f.elem(poly_rem(prod, f.modulus, p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FqElem":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def one_like(self):
        return self.field.one

    def group_order(self):
        return self.field.q - 1

    def order(self) -> int:
        return element_order(self)

    def frobenius(self) -> "FqElem":
        return self ** self.field.p

    def is_square(self) -> bool:
        if self.is_zero:
            return True
        q = self.field.q
        return q % 2 == 0 or self ** ((q - 1) // 2) == self.field.one

    def __str__(self):
        if self.field.n == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"FqElem({self}, q={self.field.q})"


def arith(a, b, kind: str):
    """Dispatch ``add``/``sub``/``mul``/``div`` on two field elements."""
    ops = {"add": lambda: a + b, "sub": lambda: a - b, "mul": lambda: a * b, "div": lambda: a / b}
    if kind not in ops:
        raise ValueError(f"unknown operation {kind!r}")
    return ops[kind]()


def element_order(a) -> int:
    """Multiplicative order of a nonzero element of F_q or of E."""
    if a.is_zero:
        raise ZeroDivisionError("zero has no multiplicative order")
    one = a.one_like()
    for d in divisors(a.group_order()):
        if a**d == one:
            return d
    raise AssertionError("order must divide the unit group order")


class FieldTables:
    """Label-indexed operation tables, as Python lists and numpy arrays."""

    def __init__(self, spec: FieldSpec):
        els = enumerate_field(spec)
        q = spec.q
        self.q = q
        self.add = [[(x + y).label for y in els] for x in els]
        self.mul = [[(x * y).label for y in els] for x in els]
        self.neg = [(-x).label for x in els]
        self.inv = [0] + [x.inverse().label for x in els[1:]]
        self.sub = [[self.add[i][self.neg[j]] for j in range(q)] for i in range(q)]
        self.zero = spec.zero.label
        self.one = spec.one.label
        self.add_np = np.array(self.add, dtype=np.int64)
        self.mul_np = np.array(self.mul, dtype=np.int64)
        self.neg_np = np.array(self.neg, dtype=np.int64)
        self.inv_np = np.array(self.inv, dtype=np.int64)
        self.sub_np = np.array(self.sub, dtype=np.int64)


# -- quadratic extension ----------------------------------------------------

@dataclass(frozen=True)
class QuadraticExtension:
    """E = F_q[t]/(t^2 + m1 t + m0)."""

    base: FieldSpec
    m0: int  # labels in base
    m1: int

    @classmethod
    def of(cls, base: FieldSpec, m0=None, m1=None) -> "QuadraticExtension":
        if m0 is None:
            return default_quadratic_extension(base)
        m0, m1 = base.elem(m0), base.elem(m1)
        if any(x * x + m1 * x + m0 == base.zero for x in base.elements):
            raise ValueError("quadratic modulus has a root in the base field")
        return cls(base, m0.label, m1.label)

    @property
    def q(self) -> int:
        return self.base.q**2

    @property
    def zero(self) -> "ExtElem":
        return ExtElem(self.base.zero, self.base.zero, self)

    @property
    def one(self) -> "ExtElem":
        return ExtElem(self.base.one, self.base.zero, self)

    @property
    def t(self) -> "ExtElem":
        return ExtElem(self.base.zero, self.base.one, self)

    def embed(self, x) -> "ExtElem":
        return ExtElem(self.base.elem(x), self.base.zero, self)

    def __call__(self, u, v=0) -> "ExtElem":
        return ExtElem(self.base.elem(u), self.base.elem(v), self)

    @cached_property
    def elements(self) -> tuple["ExtElem", ...]:
        if self.base.q > ENUM_BOUND:
            raise BoundError(f"q={self.base.q} exceeds enumeration bound {ENUM_BOUND}")
        els = self.base.elements
        return tuple(ExtElem(u, v, self) for u in els for v in els)

    def to_json(self) -> dict:
        b = self.base
        return {"base": b.to_json(), "modulus": [str(b.from_label(self.m0)), str(b.from_label(self.m1)), "1"]}


@lru_cache(maxsize=None)
def default_quadratic_extension(base: FieldSpec) -> QuadraticExtension:
    """Least irreducible t^2 + m1 t + m0 by (m0, m1) label order."""
    els = base.elements
    for m0 in els:
        for m1 in els:
            if all(x * x + m1 * x + m0 != base.zero for x in els):
                return QuadraticExtension(base, m0.label, m1.label)
    raise AssertionError("no irreducible quadratic")  # unreachable


@dataclass(frozen=True)
class ExtElem:
    u: FqElem
    v: FqElem
    ext: QuadraticExtension

    def _check(self, other):
        if isinstance(other, (int, FqElem)):
            return self.ext.embed(other)
        if not isinstance(other, ExtElem):
            return NotImplemented
        if other.ext != self.ext:
            raise FieldMismatchError("elements of different extensions")
        return other

    @property
    def label(self) -> int:
        return self.u.label * self.ext.base.q + self.v.label

    @property
    def is_zero(self) -> bool:
        return self.u.is_zero and self.v.is_zero

    def __bool__(self):
        return not self.is_zero

    @property
    def in_base(self) -> bool:
        return self.v.is_zero

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ExtElem(self.u + other.u, self.v + other.v, self.ext)

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(-self.u, -self.v, self.ext)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        b = self.ext.base
        m0, m1 = b.from_label(self.ext.m0), b.from_label(self.ext.m1)
        # t^2 = -m1 t - m0
        uu = self.u * other.u
        uv = self.u * other.v + self.v * other.u
        vv = self.v * other.v
        return ExtElem(uu - vv * m0, uv - vv * m1, self.ext)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ext.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "ExtElem":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in E")
        return self ** (self.ext.q - 2)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def one_like(self):
        return self.ext.one

    def group_order(self):
        return self.ext.q - 1

    def order(self) -> int:
        return element_order(self)

    def conjugate(self) -> "ExtElem":
        return galois_conjugate(self)

    def trace(self) -> FqElem:
        return trace(self)

    def norm(self) -> FqElem:
        return norm(self)

    def to_base(self) -> FqElem:
        if not self.in_base:
            raise ValueError(f"{self} does not lie in the base field")
        return self.u

    def __str__(self):
        if self.v.is_zero:
            return str(self.u)
        v = "" if self.v == self.ext.base.one else str(self.v)
        if "+" in v:
            v = f"({v})"
        return f"{self.u}+{v}t" if not self.u.is_zero else f"{v}t"

    def __repr__(self):
        return f"ExtElem({self}, q^2={self.ext.q})"


def galois_conjugate(x: ExtElem) -> ExtElem:
    """x -> x^q, the nontrivial automorphism of E over F_q."""
    if not isinstance(x, ExtElem):
        raise TypeError("galois_conjugate expects an element of a quadratic extension")
    return x ** x.ext.base.q


def trace(x: ExtElem) -> FqElem:
    return (x + galois_conjugate(x)).to_base()


def norm(x: ExtElem) -> FqElem:
    return (x * galois_conjugate(x)).to_base()


def minimal_polynomial(z, base: FieldSpec | None = None) -> tuple[FqElem, ...]:
    """Minimal polynomial of z over ``base``, coefficients constant term first.

    ``base`` may be the prime field, the field z lives in, or (for z in E)
    the base field of E.  Other subfields are not supported.
    """
    if isinstance(z, FqElem):
        home = z.field
        if base is None or base == home:
            Q = home.q
        elif base.n == 1 and base.p == home.p:
            Q = home.p
        else:
            raise FieldMismatchError(f"{base} is not a supported subfield of {home}")
    elif isinstance(z, ExtElem):
        home_base = z.ext.base
        if base is None or base == home_base:
            base, Q = home_base, home_base.q
        elif base.n == 1 and base.p == home_base.p:
            Q = home_base.p
        else:
            raise FieldMismatchError(f"{base} is not a supported subfield of E")
    else:
        raise TypeError("unsupported element type")

    conjugates = [z]
    c = z**Q
    while c != z:
        conjugates.append(c)
        c = c**Q

    one = z.one_like()
    zero = one - one
    poly = [one]
    for r in conjugates:
        # poly * (X - r)
        shifted = [zero] + poly
        scaled = [c * r for c in poly] + [zero]
        poly = [a - b for a, b in zip(shifted, scaled)]

    if base is None:
        return tuple(poly)
    return tuple(_descend(c, base) for c in poly)


def _descend(c, base: FieldSpec) -> FqElem:
    if isinstance(c, ExtElem):
        c = c.to_base()
    if c.field == base:
        return c
    if any(c.coeffs[1:]):
        raise AssertionError(f"coefficient {c} is not in {base}")
    return base.elem(c.coeffs[0])
