"""Distinguished nilpotent orbits in types B, C, D and the cuspidal pairs at ell = 2.

Orbits are Jordan types on the natural module: partitions of ``2n+1``
(B_n) or ``2n`` (C_n, D_n) subject to the usual parity rule. The
distinguished ones are those with distinct parts, which are checked here
against an independent sl2-grading count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .partitions import Partition, enumerate_partitions, format_partition
from .rootdata import CartanType, parse_cartan_type

__all__ = [
    "OrbitPartition",
    "natural_dimension",
    "orbit_partitions",
    "distinguished_partitions",
    "oracle_is_distinguished",
    "cuspidal_pairs_char2",
]

_CLASSICAL = ("B", "C", "D")


def _ctype(ctype, rank=None) -> CartanType:
    t = parse_cartan_type(ctype) if rank is None else CartanType(str(ctype).upper(), rank)
    if t.series not in _CLASSICAL:
        raise ValueError(f"{t} is not of type B, C or D")
    return t


def natural_dimension(t: CartanType) -> int:
    return 2 * t.rank + 1 if t.series == "B" else 2 * t.rank


def _parity_ok(series: str, parts) -> bool:
    # C: odd parts come in pairs; B, D: even parts come in pairs
    bad_parity = 1 if series == "C" else 0
    return all(m % 2 == 0 for v, m in Counter(parts).items() if v % 2 == bad_parity)


@dataclass(frozen=True)
class OrbitPartition:
    ctype: CartanType
    parts: Partition

    def __post_init__(self):
        object.__setattr__(self, "ctype", _ctype(self.ctype))
        object.__setattr__(self, "parts", Partition(self.parts))
        if self.parts.size != natural_dimension(self.ctype):
            raise ValueError(
                f"{format_partition(self.parts)} is not a partition of {natural_dimension(self.ctype)}"
            )
        if not _parity_ok(self.ctype.series, self.parts):
            raise ValueError(f"{format_partition(self.parts)} violates the parity rule for {self.ctype}")

    def __str__(self) -> str:
        return format_partition(self.parts)


def orbit_partitions(ctype, rank=None) -> list[OrbitPartition]:
    """All nilpotent orbit partitions of the classical type (very even D orbits once)."""
    t = _ctype(ctype, rank)
    return [
        OrbitPartition(t, lam)
        for lam in enumerate_partitions(natural_dimension(t))
        if _parity_ok(t.series, lam)
    ]


def distinguished_partitions(ctype, rank=None) -> list[OrbitPartition]:
    """Distinct even parts (C), distinct odd parts (B, D); reverse-lex order."""
    t = _ctype(ctype, rank)
    want_odd = t.series != "C"
    return [
        OrbitPartition(t, lam)
        for lam in enumerate_partitions(natural_dimension(t))
        if len(set(lam)) == len(lam) and all(p % 2 == want_odd for p in lam)
    ]


def oracle_is_distinguished(o: OrbitPartition) -> bool:
    """Compare the 0- and 2-eigenspaces of ``ad h`` on the Lie algebra.

    ``h`` acts on a Jordan block of size ``m`` with weights ``m-1, m-3, ..., 1-m``.
    The Lie algebra is the exterior square of the natural module for B, D
    and the symmetric square for C; ``e`` is distinguished exactly when
    ``dim g_0 == dim g_2``.
    """
    if not isinstance(o, OrbitPartition):
        raise TypeError("expected an OrbitPartition")
    weights = [m - 1 - 2 * k for m in o.parts for k in range(m)]
    symmetric = o.ctype.series == "C"
    counts = Counter()
    for i, a in enumerate(weights):
        start = i if symmetric else i + 1
        for b in weights[start:]:
            if a + b in (0, 2):
                counts[a + b] += 1
    return counts[0] == counts[2]


def cuspidal_pairs_char2(ctype, rank=None) -> list[OrbitPartition]:
    """Orbits carrying a cuspidal pair ``(O, trivial)`` in characteristic 2.

    In characteristic 2 every distinguished orbit of a simply connected
    group of type B, C or D carries exactly one pair, it is cuspidal, and
    no other orbit can support one.
    """
    return distinguished_partitions(ctype, rank)
