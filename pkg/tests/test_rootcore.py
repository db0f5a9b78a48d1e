"""Root systems, the longest-element node permutation, and its fixed subspace."""

from fractions import Fraction as Q

import pytest

from orbitspan.rational import vec
from orbitspan.rootcore import (
    SimpleType,
    WeightedDiagram,
    build_root_system,
    cartan_matrix,
    iota_fixed_subspace,
    opposition_involution,
)

# closed-form positive root counts, independent of the reflection-closure code
KNOWN_COUNTS = {
    ("A", 1): 1, ("A", 5): 15, ("B", 2): 4, ("B", 6): 36, ("C", 3): 9,
    ("C", 7): 49, ("D", 4): 12, ("D", 8): 56, ("E", 6): 36, ("E", 7): 63,
    ("E", 8): 120, ("F", 4): 24, ("G", 2): 6,
}


def all_types(max_rank: int):
    for l in range(1, max_rank + 1):
        yield SimpleType("A", l)
    for fam in ("B", "C"):
        for l in range(2, max_rank + 1):
            yield SimpleType(fam, l)
    for l in range(4, max_rank + 1):
        yield SimpleType("D", l)
    for l in (6, 7, 8):
        yield SimpleType("E", l)
    yield SimpleType("F", 4)
    yield SimpleType("G", 2)


def test_invalid_types_rejected():
    for fam, rank in [("B", 1), ("C", 1), ("D", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 1), ("A", 0)]:
        with pytest.raises(ValueError):
            SimpleType(fam, rank)


def test_d3_rejection_hints_alias():
    with pytest.raises(ValueError, match="A_3"):
        SimpleType("D", 3)


def test_positive_root_counts():
    for (fam, rank), count in KNOWN_COUNTS.items():
        rs = build_root_system(SimpleType(fam, rank))
        assert len(rs.positive_roots) == count, (fam, rank)


def test_root_system_invariants():
    for t in all_types(8):
        rs = build_root_system(t)
        a = rs.cartan_matrix
        l = t.rank
        for i in range(l):
            assert a[i][i] == 2
            for j in range(l):
                if i != j:
                    assert a[i][j] in (0, -1, -2, -3)
                    assert (a[i][j] == 0) == (a[j][i] == 0)
        for root in rs.positive_roots:
            assert all(c >= 0 for c in root)
        assert len(set(rs.positive_roots)) == len(rs.positive_roots)
        assert rs.node_labels == tuple(f"a{i+1}" for i in range(l))


def test_bond_direction_follows_node_convention():
    # the short-root row carries the bigger off-diagonal magnitude
    b4 = cartan_matrix(SimpleType("B", 4))
    assert b4[3][2] == -2 and b4[2][3] == -1  # a_4 short in B
    c4 = cartan_matrix(SimpleType("C", 4))
    assert c4[2][3] == -2 and c4[3][2] == -1  # a_4 long in C
    f4 = cartan_matrix(SimpleType("F", 4))
    assert f4[2][1] == -2 and f4[1][2] == -1  # a_3, a_4 short in F4
    g2 = cartan_matrix(SimpleType("G", 2))
    assert g2[1][0] == -3 and g2[0][1] == -1  # a_2 short in G2


def test_opposition_involution_displayed_cases():
    a2 = opposition_involution(build_root_system(SimpleType("A", 2)))
    assert a2.permutation == (1, 0)
    a5 = opposition_involution(build_root_system(SimpleType("A", 5)))
    assert a5.permutation == (4, 3, 2, 1, 0)
    for l in (2, 5, 9):
        bl = opposition_involution(build_root_system(SimpleType("B", l)))
        assert bl.is_identity()
    d4 = opposition_involution(build_root_system(SimpleType("D", 4)))
    assert d4.is_identity()
    e6 = opposition_involution(build_root_system(SimpleType("E", 6)))
    assert e6.permutation == (4, 3, 2, 1, 0, 5)


def test_involution_nontrivial_exactly_for_a_dodd_e6():
    for t in all_types(12):
        inv = opposition_involution(build_root_system(t))
        expected_nontrivial = (
            (t.family == "A" and t.rank >= 2)
            or (t.family == "D" and t.rank % 2 == 1)
            or (t.family, t.rank) == ("E", 6)
        )
        assert inv.is_identity() != expected_nontrivial, t
        # involution property and Cartan preservation are checked on construction
        perm = inv.permutation
        assert all(perm[perm[i]] == i for i in range(t.rank))


def test_iota_fixed_subspace_examples():
    a3 = iota_fixed_subspace(build_root_system(SimpleType("A", 3)))
    assert a3.dim == 2
    assert a3.contains(vec([1, 0, 1]))
    assert not a3.contains(vec([1, 0, 0]))
    f4 = iota_fixed_subspace(build_root_system(SimpleType("F", 4)))
    assert f4.dim == 4
    d5 = iota_fixed_subspace(build_root_system(SimpleType("D", 5)))
    assert d5.dim == 4
    assert d5.contains(vec([1, 2, 3, 5, 5]))
    assert not d5.contains(vec([1, 2, 3, 5, 4]))


def test_iota_fixed_dimension_counts_orbits():
    for t in all_types(12):
        inv = opposition_involution(build_root_system(t))
        two_cycles = sum(1 for i, p in enumerate(inv.permutation) if p > i)
        assert iota_fixed_subspace(build_root_system(t)).dim == t.rank - two_cycles


def test_involution_acts_on_diagrams():
    t = SimpleType("E", 6)
    inv = opposition_involution(build_root_system(t))
    d = WeightedDiagram(t, vec([1, 2, 3, 4, 5, 6]))
    assert inv.apply(d).weights == vec([5, 4, 3, 2, 1, 6])
    assert inv.apply(inv.apply(d)) == d


def test_weighted_diagram_validates_rank():
    with pytest.raises(ValueError):
        WeightedDiagram(SimpleType("A", 2), (Q(1),))
