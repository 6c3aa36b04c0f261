"""Prime coefficient fields carrying exact roots of unity.

All computations in this package run over F_p for a prime p chosen so that
p = 1 (mod r).  The multiplicative group of F_p is then cyclic of order
divisible by r, so every divisor e of r contributes a full group of e-th
roots of unity, represented exactly as integers mod p.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every modulus this package uses."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def default_prime(r: int) -> int:
    """Smallest prime p with p = 1 (mod r)."""
    if r < 1:
        raise ValueError("level r must be a positive integer")
    if r == 1:
        return 2
    p = r + 1
    while not is_prime(p):
        p += r
    return p


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldConfig:
    """F_p together with the level r; requires p prime and p = 1 (mod r)."""

    p: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("level r must be a positive integer")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p % self.r != 1 and self.r != 1:
            raise ValueError(f"need p = 1 (mod r); got p={self.p}, r={self.r}")

    @classmethod
    def for_level(cls, r: int, p: int | None = None) -> FieldConfig:
        """Field for level r, defaulting to the smallest admissible prime."""
        return cls(default_prime(r) if p is None else p, r)

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, -1, self.p)

    def primitive_root(self) -> int:
        """Smallest generator of the multiplicative group of F_p."""
        if self.p == 2:
            return 1
        order = self.p - 1
        factors = _prime_factors(order)
        for g in range(2, self.p):
            if all(pow(g, order // q, self.p) != 1 for q in factors):
                return g
        raise AssertionError("no primitive root found")  # unreachable for prime p

    def unity_roots(self, e: int) -> list[int]:
        """All e-th roots of unity in F_p, ascending.  Requires e | r."""
        if e < 1 or self.r % e != 0:
            raise ValueError(f"order {e} does not divide the level r={self.r}")
        if e == 1:
            return [1]
        zeta = pow(self.primitive_root(), (self.p - 1) // e, self.p)
        return sorted(pow(zeta, k, self.p) for k in range(e))


def unity_roots(field: FieldConfig, e: int) -> list[int]:
    return field.unity_roots(e)
