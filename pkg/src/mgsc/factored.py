"""Primes and positive integers kept in factored form."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

__all__ = ["is_prime", "require_prime", "factorize", "FactoredOrder"]


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_prime(ell) -> int:
    """Return ``ell`` unchanged, or raise ValueError if it is not a prime."""
    if isinstance(ell, bool) or not isinstance(ell, int) or not is_prime(ell):
        raise ValueError(f"ell must be a prime >= 2, got {ell!r}")
    return ell


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FactoredOrder:
    """A positive integer stored as a prime -> exponent map.

    Products and exact quotients act on exponents, so divisibility and
    p-adic valuations are read off without ever forming large integers.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | None = None):
        clean = {}
        for p, e in (factors or {}).items():
            if e < 0:
                raise ValueError(f"negative exponent {e} for {p}")
            if e == 0:
                continue
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            clean[p] = e
        self._factors = dict(sorted(clean.items()))

    @classmethod
    def of(cls, n: int) -> FactoredOrder:
        return cls(factorize(n))

    @classmethod
    def factorial(cls, n: int) -> FactoredOrder:
        """n! via Legendre's formula."""
        if n < 0:
            raise ValueError("factorial of a negative number")
        factors = {}
        for p in range(2, n + 1):
            if is_prime(p):
                e, q = 0, p
                while q <= n:
                    e += n // q
                    q *= p
                factors[p] = e
        return cls(factors)

    @classmethod
    def product(cls, items: Iterable[FactoredOrder]) -> FactoredOrder:
        acc = cls()
        for x in items:
            acc = acc * x
        return acc

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    @property
    def value(self) -> int:
        v = 1
        for p, e in self._factors.items():
            v *= p**e
        return v

    def valuation(self, p: int) -> int:
        return self._factors.get(p, 0)

    def divides(self, other: FactoredOrder) -> bool:
        return all(other.valuation(p) >= e for p, e in self._factors.items())

    def __mul__(self, other: FactoredOrder) -> FactoredOrder:
        c = Counter(self._factors)
        c.update(other._factors)
        return FactoredOrder(c)

    def __truediv__(self, other: FactoredOrder) -> FactoredOrder:
        if not other.divides(self):
            raise ValueError(f"{other.value} does not divide {self.value}")
        return FactoredOrder({p: e - other.valuation(p) for p, e in self._factors.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, FactoredOrder):
            return self._factors == other._factors
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._factors.items()))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FactoredOrder({self._factors})"

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self._factors.items())

    def to_json(self) -> dict:
        return {"value": str(self.value), "factors": {str(p): e for p, e in self._factors.items()}}
