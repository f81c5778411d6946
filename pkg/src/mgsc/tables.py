"""Stored data for exceptional groups: cuspidal pair counts and the G2 series.

Nothing here is recomputed; the values live in ``data/tables.dat``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .factored import require_prime
from .rootdata import parse_cartan_type

__all__ = [
    "G2_ORBITS",
    "LOCAL_SYSTEMS",
    "SERIES",
    "G2Pair",
    "SeriesAssignment",
    "load_table",
    "cuspidal_count_exceptional",
    "cuspidal_count_row",
    "g2_correspondence",
]

G2_ORBITS = ("G2", "G2(a1)", "A1~", "A1", "0")
LOCAL_SYSTEMS = ("triv", "sign", "refln")
SERIES = ("principal", "cuspidal", "GL2-long", "GL2-short")
COUNT_COLUMNS = ("2", "3", "5", "7+")


@lru_cache(maxsize=None)
def load_table() -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    text = resources.files("mgsc").joinpath("data/tables.dat").read_text(encoding="utf-8")
    table = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"tables.dat:{lineno}: expected 'key = value'")
        key = key.strip()
        if key in table:
            raise ValueError(f"tables.dat:{lineno}: duplicate key {key}")
        table[key] = value.strip()
    return table


def _count_column(ell: int) -> str:
    require_prime(ell)
    return str(ell) if ell < 7 else "7+"


def cuspidal_count_exceptional(t, ell: int) -> int:
    t = parse_cartan_type(t)
    if not t.is_exceptional:
        raise ValueError(f"{t} is not an exceptional type")
    return int(load_table()[f"count.{t}.{_count_column(ell)}"])


def cuspidal_count_row(t) -> dict[str, int]:
    """The four stored counts for ``t``, keyed by column (``"2"``, ..., ``"7+"``)."""
    t = parse_cartan_type(t)
    if not t.is_exceptional:
        raise ValueError(f"{t} is not an exceptional type")
    return {c: int(load_table()[f"count.{t}.{c}"]) for c in COUNT_COLUMNS}


@dataclass(frozen=True)
class G2Pair:
    orbit: str
    local_system: str = "triv"

    def __post_init__(self):
        if self.orbit not in G2_ORBITS:
            raise ValueError(f"unknown G2 orbit {self.orbit!r}")
        if self.local_system not in LOCAL_SYSTEMS:
            raise ValueError(f"unknown local system {self.local_system!r}")
        if self.local_system != "triv" and self.orbit != "G2(a1)":
            raise ValueError(f"only G2(a1) carries nontrivial local systems, got {self}")

    def __str__(self) -> str:
        return f"({self.orbit}, {self.local_system})"


@dataclass(frozen=True)
class SeriesAssignment:
    pair: G2Pair
    series: str

    def to_json(self) -> dict:
        return {"orbit": self.pair.orbit, "local_system": self.pair.local_system, "series": self.series}


def g2_correspondence(ell: int) -> list[SeriesAssignment]:
    """Series membership of every pair for G2 in characteristic ``ell``, in stored order."""
    require_prime(ell)
    column = str(ell) if ell in (2, 3) else "5+"
    prefix = f"g2.{column}."
    out = []
    for key, series in load_table().items():
        if not key.startswith(prefix):
            continue
        orbit, _, local_system = key[len(prefix):].rpartition(".")
        if series not in SERIES:
            raise ValueError(f"unknown series {series!r} for {key}")
        out.append(SeriesAssignment(G2Pair(orbit, local_system), series))
    return out

