"""Integer partitions: conjugation, l-regularity, enumeration, base-l helpers.

Partitions are immutable weakly decreasing tuples of positive integers.
The empty partition ``Partition()`` is the unique partition of 0.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from typing import Iterable

from .factored import require_prime

__all__ = [
    "Partition",
    "transpose",
    "is_ell_regular",
    "is_ell_restricted",
    "enumerate_partitions",
    "enumerate_ell_regular",
    "enumerate_power_partitions",
    "base_ell_partition",
    "base_ell_digits",
    "multiplicity",
    "scale",
    "add",
    "parse_partition",
    "format_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def from_differences(cls, diffs: Iterable[int]) -> Partition:
        """Partition whose successive differences (trailing 0 included) are ``diffs``."""
        parts = []
        acc = 0
        for d in reversed(list(diffs)):
            acc += d
            parts.append(acc)
        parts.reverse()
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    def differences(self) -> list[int]:
        """``[l_1 - l_2, l_2 - l_3, ..., l_k - 0]``."""
        return [a - b for a, b in zip(self, self[1:] + (0,))]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def multiplicity(nu: Partition, v: int) -> int:
    return sum(1 for p in nu if p == v)


def _max_run(lam: Partition) -> int:
    best = run = 0
    prev = None
    for p in lam:
        run = run + 1 if p == prev else 1
        prev = p
        best = max(best, run)
    return best


def is_ell_regular(lam: Partition, ell: int) -> bool:
    """True iff no part is repeated ``ell`` or more times."""
    require_prime(ell)
    return _max_run(lam) < ell


def is_ell_restricted(lam: Partition, ell: int) -> bool:
    """True iff every successive difference (trailing 0 appended) is below ``ell``."""
    require_prime(ell)
    return all(d < ell for d in Partition(lam).differences())


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def enumerate_ell_regular(n: int, ell: int) -> list[Partition]:
    require_prime(ell)
    return [lam for lam in enumerate_partitions(n) if _max_run(lam) < ell]


def _powers_upto(n: int, ell: int) -> list[int]:
    powers = [1]
    while powers[-1] * ell <= n:
        powers.append(powers[-1] * ell)
    return powers


def enumerate_power_partitions(n: int, ell: int) -> list[Partition]:
    """Partitions of ``n`` with every part a power of ``ell``, reverse-lex order."""
    require_prime(ell)
    if n < 0:
        raise ValueError("n must be nonnegative")
    powers = _powers_upto(n, ell)[::-1] if n else []

    def rec(rem: int, idx: int):
        if rem == 0:
            yield ()
            return
        for k in range(idx, len(powers)):
            p = powers[k]
            if p <= rem:
                for rest in rec(rem - p, k):
                    yield (p,) + rest

    return [Partition(t) for t in rec(n, 0)]


def base_ell_digits(n: int, ell: int) -> list[int]:
    """Base-``ell`` digits of ``n``, least significant first; ``[]`` for 0."""
    digits = []
    while n:
        n, r = divmod(n, ell)
        digits.append(r)
    return digits


def base_ell_partition(n: int, ell: int) -> Partition:
    """The partition of ``n`` into powers of ``ell`` read off its base-``ell`` digits."""
    require_prime(ell)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    parts = []
    for i, d in reversed(list(enumerate(base_ell_digits(n, ell)))):
        parts.extend([ell**i] * d)
    return Partition(parts)


def scale(lam: Partition, c: int) -> Partition:
    if c < 1:
        raise ValueError("scale factor must be positive")
    return Partition(c * p for p in lam)


def add(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum, padding the shorter partition with zeros."""
    return Partition(a + b for a, b in zip_longest(lam, mu, fillvalue=0))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"``; ``"0"`` (or an empty string) is the empty partition."""
    text = text.strip()
    if text in ("0", "", "()"):
        return Partition()
    try:
        parts = [int(t) for t in text.strip("()").split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"
