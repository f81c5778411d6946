"""Cartan types, Dynkin diagrams, Weyl group orders and standard parabolics.

Orders are always :class:`FactoredOrder` values, so the divisibility test
behind the minimal-Levi search is exact at any rank.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from . import bourbaki
from .factored import FactoredOrder, require_prime

__all__ = [
    "InvariantError",
    "CartanType",
    "DynkinDiagram",
    "parse_cartan_type",
    "dynkin_diagram",
    "weyl_order",
    "subdiagram_components",
    "parabolic_order",
    "sylow_minimal_levis",
    "is_regular_pair_cuspidal",
    "is_regular_pair_principal",
]

SimpleSubset = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


class InvariantError(AssertionError):
    """An internal consistency check failed."""


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if isinstance(r, bool) or not isinstance(r, int):
            raise ValueError(f"rank must be an integer, got {r!r}")
        if s in _MIN_RANK:
            ok = r >= _MIN_RANK[s]
        elif s in _EXCEPTIONAL_RANKS:
            ok = r in _EXCEPTIONAL_RANKS[s]
        else:
            raise ValueError(f"unknown Cartan series {s!r}")
        if not ok:
            raise ValueError(f"inadmissible Cartan type {s}{r}")

    @property
    def is_exceptional(self) -> bool:
        return self.series in _EXCEPTIONAL_RANKS

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def parse_cartan_type(text) -> CartanType:
    """Parse ``"E8"``, ``"A4"``, ``"G2"`` (also ``"E_8"``)."""
    if isinstance(text, CartanType):
        return text
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", str(text))
    if not m:
        raise ValueError(f"cannot parse Cartan type {text!r}")
    return CartanType(m.group(1).upper(), int(m.group(2)))


@dataclass(frozen=True)
class DynkinDiagram:
    ctype: CartanType
    nodes: tuple[int, ...]
    edges: tuple[bourbaki.Edge, ...] = field(repr=False)

    def neighbours(self, i: int, within: Iterable[int] | None = None) -> list[int]:
        allowed = set(self.nodes if within is None else within)
        out = []
        for a, b, _, _ in self.edges:
            if a == i and b in allowed:
                out.append(b)
            elif b == i and a in allowed:
                out.append(a)
        return out


def dynkin_diagram(t) -> DynkinDiagram:
    t = parse_cartan_type(t)
    return DynkinDiagram(t, tuple(range(1, t.rank + 1)), tuple(bourbaki.edges(t.series, t.rank)))


def weyl_order(t) -> FactoredOrder:
    t = parse_cartan_type(t)
    n = t.rank
    if t.series == "A":
        return FactoredOrder.factorial(n + 1)
    if t.series in ("B", "C"):
        return FactoredOrder({2: n}) * FactoredOrder.factorial(n)
    if t.series == "D":
        return FactoredOrder({2: n - 1}) * FactoredOrder.factorial(n)
    return FactoredOrder.of(_EXCEPTIONAL_ORDERS[(t.series, n)])


def _check_subset(d: DynkinDiagram, J: Iterable[int]) -> SimpleSubset:
    J = tuple(sorted(set(J)))
    bad = [j for j in J if j not in d.nodes]
    if bad:
        raise ValueError(f"nodes {bad} not in the diagram of {d.ctype}")
    return J


def _components(d: DynkinDiagram, J: SimpleSubset) -> list[list[int]]:
    seen, comps = set(), []
    for start in J:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in d.neighbours(v, J):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _classify(d: DynkinDiagram, comp: list[int]) -> CartanType:
    k = len(comp)
    if k == 1:
        return CartanType("A", 1)
    inside = set(comp)
    sub_edges = [e for e in d.edges if e[0] in inside and e[1] in inside]
    degree = {v: len(d.neighbours(v, comp)) for v in comp}
    multiple = [e for e in sub_edges if e[2] > 1]
    if multiple:
        (a, b, bond, long_node), = multiple
        if bond == 3:
            return CartanType("G", 2)
        if k == 2:
            return CartanType("B", 2)
        leaves = [v for v in (a, b) if degree[v] == 1]
        if not leaves:
            return CartanType("F", 4)
        # B: short root at the end of the chain; C: long root there
        return CartanType("C" if leaves[0] == long_node else "B", k)
    if max(degree.values()) <= 2:
        return CartanType("A", k)
    branch = next(v for v in comp if degree[v] == 3)
    arms = []
    for start in d.neighbours(branch, comp):
        length, prev, cur = 1, branch, start
        while True:
            nxt = [w for w in d.neighbours(cur, comp) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return CartanType("D", k)
    return CartanType("E", k)


def subdiagram_components(d: DynkinDiagram, J: Iterable[int]) -> list[CartanType]:
    """Types of the connected components of the subdiagram on ``J``, sorted."""
    J = _check_subset(d, J)
    return sorted(_classify(d, c) for c in _components(d, J))


def parabolic_order(t, J: Iterable[int]) -> FactoredOrder:
    d = dynkin_diagram(t)
    return FactoredOrder.product(weyl_order(c) for c in subdiagram_components(d, J))


def sylow_minimal_levis(t, ell: int) -> list[SimpleSubset]:
    """Inclusion-minimal ``J`` with ``ell`` not dividing ``|W| / |W_J|``.

    Visits all ``2**rank`` subsets; intended for the ranks of simple types
    met in practice (rank <= ~16).
    """
    t = parse_cartan_type(t)
    require_prime(ell)
    d = dynkin_diagram(t)
    target = weyl_order(t).valuation(ell)
    minimal: list[SimpleSubset] = []
    orders = []
    for size in range(t.rank + 1):
        for J in combinations(d.nodes, size):
            if any(set(m) <= set(J) for m in minimal):
                continue
            order = parabolic_order(t, J)
            if order.valuation(ell) == target:
                minimal.append(J)
                orders.append(order)
    if len(set(orders)) != 1:
        raise InvariantError(f"minimal Sylow Levis of {t} at ell={ell} have unequal orders {orders}")
    return minimal


def is_regular_pair_cuspidal(t, ell: int) -> bool:
    t = parse_cartan_type(t)
    return sylow_minimal_levis(t, ell) == [tuple(range(1, t.rank + 1))]


def is_regular_pair_principal(t, ell: int) -> bool:
    require_prime(ell)
    return weyl_order(t).valuation(ell) == 0
