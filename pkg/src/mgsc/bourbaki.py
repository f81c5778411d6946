"""Dynkin diagram edges in Bourbaki numbering.

Every node-numbered answer in the package (subset lists, golden files) is
relative to these tables. An edge is ``(i, j, bond, long_node)``: ``bond``
is 1, 2 or 3 and ``long_node`` names the long-root end of a multiple bond
(``None`` for simple bonds).

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          n short
    C_n   1 - 2 - ... - (n-1) <= n          n long
    D_n   1 - 2 - ... - (n-2) < (n-1), n
    E_n   1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
    F_4   1 - 2 => 3 - 4                    1, 2 long
    G_2   1 <= 2 (triple)                   2 long
"""

Edge = tuple[int, int, int, "int | None"]

EXCEPTIONAL_EDGES: dict[tuple[str, int], list[Edge]] = {
    ("E", 6): [(1, 3, 1, None), (3, 4, 1, None), (4, 5, 1, None), (5, 6, 1, None),
               (2, 4, 1, None)],
    ("E", 7): [(1, 3, 1, None), (3, 4, 1, None), (4, 5, 1, None), (5, 6, 1, None),
               (6, 7, 1, None), (2, 4, 1, None)],
    ("E", 8): [(1, 3, 1, None), (3, 4, 1, None), (4, 5, 1, None), (5, 6, 1, None),
               (6, 7, 1, None), (7, 8, 1, None), (2, 4, 1, None)],
    ("F", 4): [(1, 2, 1, None), (2, 3, 2, 2), (3, 4, 1, None)],
    ("G", 2): [(1, 2, 3, 2)],
}


def classical_edges(series: str, n: int) -> list[Edge]:
    if series == "A":
        return [(i, i + 1, 1, None) for i in range(1, n)]
    if series in ("B", "C"):
        chain = [(i, i + 1, 1, None) for i in range(1, n - 1)]
        long_node = n - 1 if series == "B" else n
        return chain + [(n - 1, n, 2, long_node)]
    if series == "D":
        chain = [(i, i + 1, 1, None) for i in range(1, n - 1)]
        return chain + [(n - 2, n, 1, None)]
    raise ValueError(f"not a classical series: {series}")


def edges(series: str, n: int) -> list[Edge]:
    if (series, n) in EXCEPTIONAL_EDGES:
        return list(EXCEPTIONAL_EDGES[(series, n)])
    return classical_edges(series, n)
