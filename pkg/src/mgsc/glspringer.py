"""Modular generalized Springer correspondence for GL(n).

Cuspidal data are partitions ``nu`` of ``n`` into powers of ``ell``; the
relative Weyl group of ``L_nu`` is a product of symmetric groups, one per
power ``ell**i`` occurring in ``nu``; its simple modules are tuples of
``ell``-regular partitions, and the tuple ``(lam0, lam1, ...)`` lands on the
orbit ``sum_i ell**i * transpose(lam_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .factored import require_prime
from .partitions import (
    Partition,
    add,
    base_ell_digits,
    enumerate_ell_regular,
    enumerate_power_partitions,
    format_partition,
    is_ell_regular,
    multiplicity,
    scale,
    transpose,
)

__all__ = [
    "CuspidalDatumGL",
    "IrrTupleGL",
    "GLPair",
    "GLRow",
    "cuspidal_data",
    "relative_weyl",
    "irr_labels",
    "induce",
    "locate",
    "full_correspondence",
    "springer_principal",
    "principal_datum",
]


def _power_exponent(v: int, ell: int) -> int | None:
    i = 0
    while v % ell == 0:
        v //= ell
        i += 1
    return i if v == 1 else None


@dataclass(frozen=True)
class CuspidalDatumGL:
    """``(L_nu, regular orbit, trivial local system)``, recorded by ``nu``."""

    nu: Partition

    def __post_init__(self):
        object.__setattr__(self, "nu", Partition(self.nu))

    @property
    def n(self) -> int:
        return self.nu.size

    def check(self, ell: int) -> None:
        if not self.nu:
            raise ValueError("cuspidal datum of GL(0) is not defined")
        for p in self.nu:
            if _power_exponent(p, ell) is None:
                raise ValueError(f"part {p} of {format_partition(self.nu)} is not a power of {ell}")

    def multiplicities(self, ell: int) -> list[int]:
        """``[m_1, m_ell, m_ell^2, ...]`` up to the largest part."""
        self.check(ell)
        top = _power_exponent(self.nu[0], ell)
        return [multiplicity(self.nu, ell**i) for i in range(top + 1)]

    def __str__(self) -> str:
        return format_partition(self.nu)


class IrrTupleGL(tuple):
    """``(lam0, lam1, ...)`` with ``lam_i`` labelling a simple module of the
    ``i``-th symmetric group factor; trailing empty entries are dropped."""

    def __new__(cls, labels=()):
        labels = [Partition(x) for x in labels]
        while labels and not labels[-1]:
            labels.pop()
        return super().__new__(cls, labels)

    def __repr__(self) -> str:
        return f"IrrTupleGL({tuple(tuple(x) for x in self)!r})"

    def __str__(self) -> str:
        return "(" + "; ".join(format_partition(x) for x in self) + ")"


@dataclass(frozen=True)
class GLPair:
    """The pair (orbit with Jordan type ``lam``, trivial local system)."""

    lam: Partition

    def __str__(self) -> str:
        return format_partition(self.lam)


@dataclass(frozen=True)
class GLRow:
    datum: CuspidalDatumGL
    labels: IrrTupleGL
    lam: Partition

    def to_json(self) -> dict:
        return {
            "nu": format_partition(self.datum.nu),
            "labels": [format_partition(x) for x in self.labels],
            "lambda": format_partition(self.lam),
        }


def cuspidal_data(n: int, ell: int) -> list[CuspidalDatumGL]:
    require_prime(ell)
    if n < 1:
        raise ValueError("n must be positive")
    return [CuspidalDatumGL(nu) for nu in enumerate_power_partitions(n, ell)]


def relative_weyl(d: CuspidalDatumGL, ell: int) -> list[tuple[int, int]]:
    """``[(ell**i, m_i), ...]`` for the powers occurring in ``nu``, smallest first."""
    require_prime(ell)
    return [(ell**i, m) for i, m in enumerate(d.multiplicities(ell)) if m]


def irr_labels(d: CuspidalDatumGL, ell: int) -> list[IrrTupleGL]:
    require_prime(ell)
    factors = [enumerate_ell_regular(m, ell) for m in d.multiplicities(ell)]
    return [IrrTupleGL(t) for t in product(*factors)]


def induce(d: CuspidalDatumGL, t: IrrTupleGL, ell: int) -> GLPair:
    require_prime(ell)
    mults = d.multiplicities(ell)
    t = IrrTupleGL(t)
    if len(t) > len(mults):
        raise ValueError(f"label tuple {t} longer than the datum {d} allows")
    lam = Partition()
    for i, m in enumerate(mults):
        label = t[i] if i < len(t) else Partition()
        if label.size != m:
            raise ValueError(f"label {format_partition(label)} at power {ell}^{i} should have size {m}")
        if not is_ell_regular(label, ell):
            raise ValueError(f"label {format_partition(label)} is not {ell}-regular")
        if label:
            lam = add(lam, scale(transpose(label), ell**i))
    return GLPair(lam)


def locate(lam: Partition, ell: int) -> tuple[CuspidalDatumGL, IrrTupleGL]:
    """Inverse of :func:`induce`.

    Each difference ``lam_j - lam_{j+1}`` is split into base-``ell`` digits;
    the digit-``i`` differences define an ``ell``-restricted partition whose
    transpose is the ``i``-th label.
    """
    require_prime(ell)
    lam = Partition(lam)
    if not lam:
        raise ValueError("locate needs a nonempty partition")
    digit_rows = [base_ell_digits(dj, ell) for dj in lam.differences()]
    depth = max(len(r) for r in digit_rows)
    labels = []
    for i in range(depth):
        rho = Partition.from_differences(r[i] if i < len(r) else 0 for r in digit_rows)
        labels.append(transpose(rho))
    nu = []
    for i in reversed(range(depth)):
        nu.extend([ell**i] * labels[i].size)
    return CuspidalDatumGL(Partition(nu)), IrrTupleGL(labels)


def full_correspondence(n: int, ell: int) -> list[GLRow]:
    """One row per (cuspidal datum, label); ``p(n)`` rows in total."""
    rows = []
    for d in cuspidal_data(n, ell):
        for t in irr_labels(d, ell):
            rows.append(GLRow(d, t, induce(d, t, ell).lam))
    return rows


def springer_principal(mu: Partition, ell: int) -> GLPair:
    """``D^mu`` of the symmetric group goes to the orbit of ``transpose(mu)``."""
    require_prime(ell)
    mu = Partition(mu)
    if not is_ell_regular(mu, ell):
        raise ValueError(f"{format_partition(mu)} is not {ell}-regular")
    return GLPair(transpose(mu))


def principal_datum(n: int) -> CuspidalDatumGL:
    return CuspidalDatumGL(Partition([1] * n))

