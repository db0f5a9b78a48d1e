"""Bala-Carter-labelled weighted Dynkin diagrams for the exceptional types.

Node order follows the package's frozen diagram convention (see rootcore).
Rows are ordered by orbit dimension, then label; this is the canonical table
order used for deterministic greedy bases.  The sets are cross-validated by
the sl2 witness oracle (see scripts/derive_exceptional_tables.py and the test
suite); row counts are 5, 16, 21, 45, 70.
"""

from __future__ import annotations

TABLES: dict[str, tuple[tuple[str, tuple[int, ...]], ...]] = {
    "G2": (
        ("0", (0, 0)),
        ("A_1", (1, 0)),
        ("Ã_1", (0, 1)),
        ("G_2(a_1)", (2, 0)),
        ("G_2", (2, 2)),
    ),
    "F4": (
        ("0", (0, 0, 0, 0)),
        ("A_1", (1, 0, 0, 0)),
        ("Ã_1", (0, 0, 0, 1)),
        ("A_1+Ã_1", (0, 1, 0, 0)),
        ("A_2", (2, 0, 0, 0)),
        ("Ã_2", (0, 0, 0, 2)),
        ("A_2+Ã_1", (0, 0, 1, 0)),
        ("B_2", (2, 0, 0, 1)),
        ("Ã_2+A_1", (0, 1, 0, 1)),
        ("C_3(a_1)", (1, 0, 1, 0)),
        ("F_4(a_3)", (0, 2, 0, 0)),
        ("B_3", (2, 2, 0, 0)),
        ("C_3", (1, 0, 1, 2)),
        ("F_4(a_2)", (0, 2, 0, 2)),
        ("F_4(a_1)", (2, 2, 0, 2)),
        ("F_4", (2, 2, 2, 2)),
    ),
    # E6/E7/E8 generated by scripts/derive_exceptional_tables.py
    "E6": (
        ("0", (0, 0, 0, 0, 0, 0)),
        ("A_1", (0, 0, 0, 0, 0, 1)),
        ("2A_1", (1, 0, 0, 0, 1, 0)),
        ("3A_1", (0, 0, 1, 0, 0, 0)),
        ("A_2", (0, 0, 0, 0, 0, 2)),
        ("A_2+A_1", (1, 0, 0, 0, 1, 1)),
        ("2A_2", (2, 0, 0, 0, 2, 0)),
        ("A_2+2A_1", (0, 1, 0, 1, 0, 0)),
        ("A_3", (1, 0, 0, 0, 1, 2)),
        ("2A_2+A_1", (1, 0, 1, 0, 1, 0)),
        ("A_3+A_1", (0, 1, 0, 1, 0, 1)),
        ("D_4(a_1)", (0, 0, 2, 0, 0, 0)),
        ("A_4", (2, 0, 0, 0, 2, 2)),
        ("D_4", (0, 0, 2, 0, 0, 2)),
        ("A_4+A_1", (1, 1, 0, 1, 1, 1)),
        ("A_5", (2, 1, 0, 1, 2, 1)),
        ("D_5(a_1)", (1, 1, 0, 1, 1, 2)),
        ("E_6(a_3)", (2, 0, 2, 0, 2, 0)),
        ("D_5", (2, 0, 2, 0, 2, 2)),
        ("E_6(a_1)", (2, 2, 0, 2, 2, 2)),
        ("E_6", (2, 2, 2, 2, 2, 2)),
    ),
    "E7": (
        ("0", (0, 0, 0, 0, 0, 0, 0)),
        ("A_1", (0, 0, 0, 0, 0, 1, 0)),
        ("2A_1", (0, 1, 0, 0, 0, 0, 0)),
        ("(3A_1)''", (2, 0, 0, 0, 0, 0, 0)),
        ("(3A_1)'", (0, 0, 0, 0, 1, 0, 0)),
        ("A_2", (0, 0, 0, 0, 0, 2, 0)),
        ("4A_1", (1, 0, 0, 0, 0, 0, 1)),
        ("A_2+A_1", (0, 1, 0, 0, 0, 1, 0)),
        ("A_2+2A_1", (0, 0, 0, 1, 0, 0, 0)),
        ("2A_2", (0, 2, 0, 0, 0, 0, 0)),
        ("A_2+3A_1", (0, 0, 0, 0, 0, 0, 2)),
        ("A_3", (0, 1, 0, 0, 0, 2, 0)),
        ("(A_3+A_1)''", (2, 0, 0, 0, 0, 2, 0)),
        ("2A_2+A_1", (0, 1, 0, 0, 1, 0, 0)),
        ("(A_3+A_1)'", (0, 0, 0, 1, 0, 1, 0)),
        ("A_3+2A_1", (1, 0, 1, 0, 0, 1, 0)),
        ("D_4(a_1)", (0, 0, 0, 0, 2, 0, 0)),
        ("D_4", (0, 0, 0, 0, 2, 2, 0)),
        ("D_4(a_1)+A_1", (1, 0, 0, 0, 1, 0, 1)),
        ("A_3+A_2", (0, 1, 0, 1, 0, 0, 0)),
        ("A_3+A_2+A_1", (0, 0, 2, 0, 0, 0, 0)),
        ("A_4", (0, 2, 0, 0, 0, 2, 0)),
        ("(A_5)''", (2, 2, 0, 0, 0, 2, 0)),
        ("D_4+A_1", (1, 0, 0, 0, 1, 2, 1)),
        ("A_4+A_1", (0, 1, 0, 1, 0, 1, 0)),
        ("A_4+A_2", (0, 0, 0, 2, 0, 0, 0)),
        ("D_5(a_1)", (0, 1, 0, 1, 0, 2, 0)),
        ("(A_5)'", (0, 2, 0, 1, 0, 1, 0)),
        ("A_5+A_1", (2, 1, 0, 1, 0, 1, 0)),
        ("D_5(a_1)+A_1", (0, 0, 2, 0, 0, 2, 0)),
        ("D_6(a_2)", (2, 0, 1, 0, 1, 0, 1)),
        ("E_6(a_3)", (0, 2, 0, 0, 2, 0, 0)),
        ("D_5", (0, 2, 0, 0, 2, 2, 0)),
        ("E_7(a_5)", (2, 0, 0, 2, 0, 0, 0)),
        ("A_6", (0, 2, 0, 2, 0, 0, 0)),
        ("D_5+A_1", (0, 1, 1, 0, 1, 2, 1)),
        ("D_6(a_1)", (2, 0, 1, 0, 1, 2, 1)),
        ("E_7(a_4)", (2, 0, 0, 2, 0, 2, 0)),
        ("D_6", (2, 2, 1, 0, 1, 2, 1)),
        ("E_6(a_1)", (0, 2, 0, 2, 0, 2, 0)),
        ("E_6", (0, 2, 0, 2, 2, 2, 0)),
        ("E_7(a_3)", (2, 2, 0, 2, 0, 2, 0)),
        ("E_7(a_2)", (2, 0, 2, 0, 2, 2, 2)),
        ("E_7(a_1)", (2, 2, 2, 0, 2, 2, 2)),
        ("E_7", (2, 2, 2, 2, 2, 2, 2)),
    ),
    "E8": (
        ("0", (0, 0, 0, 0, 0, 0, 0, 0)),
        ("A_1", (1, 0, 0, 0, 0, 0, 0, 0)),
        ("2A_1", (0, 0, 0, 0, 0, 0, 1, 0)),
        ("3A_1", (0, 1, 0, 0, 0, 0, 0, 0)),
        ("A_2", (2, 0, 0, 0, 0, 0, 0, 0)),
        ("4A_1", (0, 0, 0, 0, 0, 0, 0, 1)),
        ("A_2+A_1", (1, 0, 0, 0, 0, 0, 1, 0)),
        ("A_2+2A_1", (0, 0, 1, 0, 0, 0, 0, 0)),
        ("A_3", (2, 0, 0, 0, 0, 0, 1, 0)),
        ("A_2+3A_1", (0, 0, 0, 0, 0, 1, 0, 0)),
        ("2A_2", (0, 0, 0, 0, 0, 0, 2, 0)),
        ("2A_2+A_1", (0, 1, 0, 0, 0, 0, 1, 0)),
        ("A_3+A_1", (1, 0, 1, 0, 0, 0, 0, 0)),
        ("D_4(a_1)", (0, 2, 0, 0, 0, 0, 0, 0)),
        ("2A_2+2A_1", (0, 0, 0, 1, 0, 0, 0, 0)),
        ("D_4", (2, 2, 0, 0, 0, 0, 0, 0)),
        ("A_3+2A_1", (1, 0, 0, 0, 0, 1, 0, 0)),
        ("D_4(a_1)+A_1", (0, 1, 0, 0, 0, 0, 0, 1)),
        ("A_3+A_2", (0, 0, 1, 0, 0, 0, 1, 0)),
        ("A_4", (2, 0, 0, 0, 0, 0, 2, 0)),
        ("A_3+A_2+A_1", (0, 0, 0, 0, 1, 0, 0, 0)),
        ("D_4(a_1)+A_2", (0, 0, 0, 0, 0, 0, 0, 2)),
        ("D_4+A_1", (2, 1, 0, 0, 0, 0, 0, 1)),
        ("2A_3", (0, 0, 0, 1, 0, 0, 1, 0)),
        ("A_4+A_1", (1, 0, 1, 0, 0, 0, 1, 0)),
        ("D_5(a_1)", (2, 0, 1, 0, 0, 0, 1, 0)),
        ("A_4+2A_1", (1, 0, 0, 0, 1, 0, 0, 0)),
        ("A_4+A_2", (0, 0, 2, 0, 0, 0, 0, 0)),
        ("A_4+A_2+A_1", (0, 0, 1, 0, 0, 1, 0, 0)),
        ("A_5", (1, 0, 1, 0, 0, 0, 2, 0)),
        ("D_5(a_1)+A_1", (2, 0, 0, 0, 1, 0, 0, 0)),
        ("D_4+A_2", (2, 0, 0, 0, 0, 0, 0, 2)),
        ("E_6(a_3)", (0, 2, 0, 0, 0, 0, 2, 0)),
        ("A_4+A_3", (0, 1, 0, 0, 1, 0, 0, 0)),
        ("D_5", (2, 2, 0, 0, 0, 0, 2, 0)),
        ("A_5+A_1", (1, 0, 0, 0, 1, 0, 1, 0)),
        ("D_5(a_1)+A_2", (1, 0, 1, 0, 0, 1, 0, 0)),
        ("D_6(a_2)", (0, 1, 0, 0, 0, 1, 0, 1)),
        ("E_6(a_3)+A_1", (0, 1, 0, 1, 0, 0, 1, 0)),
        ("E_7(a_5)", (0, 0, 1, 0, 1, 0, 0, 0)),
        ("D_5+A_1", (2, 1, 0, 1, 0, 0, 1, 0)),
        ("E_8(a_7)", (0, 0, 0, 2, 0, 0, 0, 0)),
        ("A_6", (0, 0, 2, 0, 0, 0, 2, 0)),
        ("D_6(a_1)", (2, 1, 0, 0, 0, 1, 0, 1)),
        ("A_6+A_1", (0, 0, 1, 0, 1, 0, 1, 0)),
        ("E_7(a_4)", (2, 0, 1, 0, 1, 0, 0, 0)),
        ("D_5+A_2", (2, 0, 0, 2, 0, 0, 0, 0)),
        ("E_6(a_1)", (2, 0, 2, 0, 0, 0, 2, 0)),
        ("D_6", (2, 1, 0, 0, 0, 1, 2, 1)),
        ("D_7(a_2)", (1, 0, 1, 0, 1, 0, 1, 0)),
        ("E_6", (2, 2, 2, 0, 0, 0, 2, 0)),
        ("A_7", (0, 1, 1, 0, 1, 0, 1, 0)),
        ("E_6(a_1)+A_1", (2, 0, 1, 0, 1, 0, 1, 0)),
        ("E_7(a_3)", (2, 0, 1, 0, 1, 0, 2, 0)),
        ("E_8(b_6)", (2, 0, 0, 0, 2, 0, 0, 0)),
        ("D_7(a_1)", (2, 0, 0, 2, 0, 0, 2, 0)),
        ("E_6+A_1", (2, 2, 1, 0, 1, 0, 1, 0)),
        ("E_7(a_2)", (2, 2, 0, 1, 0, 1, 0, 1)),
        ("E_8(a_6)", (0, 2, 0, 0, 2, 0, 0, 0)),
        ("D_7", (1, 0, 1, 1, 0, 1, 2, 1)),
        ("E_8(b_5)", (2, 2, 0, 0, 2, 0, 0, 0)),
        ("E_7(a_1)", (2, 2, 0, 1, 0, 1, 2, 1)),
        ("E_8(a_5)", (0, 2, 0, 0, 2, 0, 2, 0)),
        ("E_8(b_4)", (2, 2, 0, 0, 2, 0, 2, 0)),
        ("E_7", (2, 2, 2, 1, 0, 1, 2, 1)),
        ("E_8(a_4)", (2, 0, 2, 0, 2, 0, 2, 0)),
        ("E_8(a_3)", (2, 2, 2, 0, 2, 0, 2, 0)),
        ("E_8(a_2)", (2, 2, 0, 2, 0, 2, 2, 2)),
        ("E_8(a_1)", (2, 2, 2, 2, 0, 2, 2, 2)),
        ("E_8", (2, 2, 2, 2, 2, 2, 2, 2)),
    ),
}
