"""Exact checks of two totient inequalities.

    phi(n) > (n/2)^(3/4)        for 3 ∤ n, 4 ∤ n     (tested as 8 phi(n)^4 > n^3)
    phi(3^p - 1) > p 3^((p-1)/2) for odd primes p
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy import factorint

from .ff import is_prime


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    out = n
    for p in factorint(n):
        out -= out // p
    return out


@dataclass(frozen=True)
class PhiCheck:
    n: int
    phi: int
    lhs: int   # 8 phi^4
    rhs: int   # n^3
    passed: bool

    def to_json(self) -> dict:
        return {"n": self.n, "phi": self.phi, "passed": self.passed}


def _qualifies(n: int) -> bool:
    return n > 1 and n % 3 != 0 and n % 4 != 0


def lematec_check(n: int, phi: int | None = None) -> PhiCheck:
    if not _qualifies(n):
        raise ValueError(f"n = {n} needs n > 1, 3 ∤ n and 4 ∤ n")
    phi = euler_phi(n) if phi is None else phi
    lhs, rhs = 8 * phi**4, n**3
    return PhiCheck(n, phi, lhs, rhs, lhs > rhs)


def phi_table(max_n: int) -> np.ndarray:
    """phi(0..max_n) from a smallest-prime-factor sieve."""
    spf = np.zeros(max_n + 1, dtype=np.int64)
    for p in range(2, max_n + 1):
        if spf[p] == 0:
            block = spf[p::p]
            block[block == 0] = p
    phi = np.arange(max_n + 1, dtype=np.int64)
    for n in range(2, max_n + 1):
        m = n
        while m > 1:
            p = int(spf[m])
            phi[n] -= phi[n] // p
            while m % p == 0:
                m //= p
    return phi


@dataclass
class LematecSweep:
    max_n: int
    checked: int
    failures: list[PhiCheck]
    boundary: list[PhiCheck]   # n <= 2, recorded but not asserted

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [c.to_json() for c in self.failures],
            "boundary": [c.to_json() for c in self.boundary],
        }


def lematec_sweep(max_n: int = 10**5) -> LematecSweep:
    phi = phi_table(max_n)
    failures, boundary, checked = [], [], 0
    for n in range(2, max_n + 1):
        if not _qualifies(n):
            continue
        c = lematec_check(n, int(phi[n]))
        if n <= 2:
            boundary.append(c)
            continue
        checked += 1
        if not c.passed:
            failures.append(c)
    return LematecSweep(max_n, checked, failures, boundary)


@dataclass(frozen=True)
class SnlCheck:
    p: int
    phi: int
    bound: int   # p * 3^((p-1)/2)
    passed: bool

    def to_json(self) -> dict:
        return {"p": self.p, "phi": self.phi, "bound": self.bound, "passed": self.passed}


def snl_check(p: int) -> SnlCheck:
    if p == 2 or not is_prime(p):
        raise ValueError(f"p = {p} must be an odd prime")
    phi = euler_phi(3**p - 1)
    bound = p * 3 ** ((p - 1) // 2)
    return SnlCheck(p, phi, bound, phi > bound)


def snl_sweep(max_p: int = 31) -> list[SnlCheck]:
    return [snl_check(p) for p in range(3, max_p + 1) if is_prime(p)]
