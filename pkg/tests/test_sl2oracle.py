"""The Chevalley-model witness oracle: bracket axioms and characteristic tests."""

from fractions import Fraction as Q
from itertools import product

import pytest

from orbitspan.nilorbits import enumerate_complex_characteristics
from orbitspan.rootcore import SimpleType, WeightedDiagram
from orbitspan.sl2oracle import build_chevalley, is_characteristic


def elt(model, idx):
    return {idx: Q(1)}


def lie_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, Q(0)) + v
        if s == 0:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def test_model_dimensions():
    assert build_chevalley(SimpleType("A", 1)).dimension == 3
    assert build_chevalley(SimpleType("G", 2)).dimension == 14
    assert build_chevalley(SimpleType("C", 3)).dimension == 21
    assert build_chevalley(SimpleType("F", 4)).dimension == 52


def test_rank_bound_guard():
    with pytest.raises(ValueError, match="max_rank"):
        build_chevalley(SimpleType("E", 7))
    assert build_chevalley(SimpleType("E", 7), max_rank=7).dimension == 133


def basis_elements(model):
    out = [elt(model, i) for i in range(model.rank)]
    out += [elt(model, model.root_index(r)) for r in model.roots]
    return out


@pytest.mark.parametrize("fam,rank", [("A", 2), ("B", 2), ("G", 2), ("C", 3)])
def test_jacobi_identity_full(fam, rank):
    model = build_chevalley(SimpleType(fam, rank))
    basis = basis_elements(model)
    for x in basis:
        for y in basis:
            bxy = model.bracket(x, y)
            byx = model.bracket(y, x)
            assert lie_add(bxy, byx) == {}, "antisymmetry"
            for z in basis:
                j = lie_add(
                    model.bracket(x, model.bracket(y, z)),
                    lie_add(
                        model.bracket(y, model.bracket(z, x)),
                        model.bracket(z, model.bracket(x, y)),
                    ),
                )
                assert j == {}, "jacobi"


def test_jacobi_identity_spot_check_f4_d4():
    import random

    rng = random.Random(11)
    for fam, rank in [("F", 4), ("D", 4)]:
        model = build_chevalley(SimpleType(fam, rank))
        basis = basis_elements(model)
        for _ in range(250):
            x, y, z = (rng.choice(basis) for _ in range(3))
            j = lie_add(
                model.bracket(x, model.bracket(y, z)),
                lie_add(
                    model.bracket(y, model.bracket(z, x)),
                    model.bracket(z, model.bracket(x, y)),
                ),
            )
            assert j == {}


def test_cartan_acts_with_integer_eigenvalues():
    model = build_chevalley(SimpleType("G", 2))
    for i in range(model.rank):
        for r in model.roots:
            out = model.bracket(elt(model, i), elt(model, model.root_index(r)))
            assert set(out) <= {model.root_index(r)}
            if out:
                assert out[model.root_index(r)].denominator == 1


def test_sl2_identity_case():
    t = SimpleType("A", 1)
    model = build_chevalley(t)
    ok, witness = is_characteristic(model, WeightedDiagram(t, (Q(2),)))
    assert ok
    assert witness is not None and len(witness.e) == 1 and len(witness.f) == 1


def test_g2_examples():
    t = SimpleType("G", 2)
    model = build_chevalley(t)
    ok, witness = is_characteristic(model, WeightedDiagram(t, (Q(2), Q(0))))
    assert ok and witness is not None
    ok2, w2 = is_characteristic(model, WeightedDiagram(t, (Q(0), Q(2))))
    assert not ok2 and w2 is None


def test_witness_brackets_hold_exactly():
    t = SimpleType("C", 3)
    model = build_chevalley(t)
    for od in enumerate_complex_characteristics(t):
        ok, witness = is_characteristic(model, od.diagram)
        assert ok, od.label
        if od.diagram.is_zero():
            assert witness.e == () and witness.f == ()
            continue
        # reconstruct elements and re-check the three bracket relations
        e = {model.root_index(r): c for r, c in witness.e}
        f = {model.root_index(r): c for r, c in witness.f}
        from orbitspan.rational import solve

        h_coeffs = solve(
            [[Q(model.cartan[j][i]) for j in range(model.rank)] for i in range(model.rank)],
            [Q(x) for x in od.diagram.weights],
        )
        h = {i: c for i, c in enumerate(h_coeffs) if c != 0}
        assert model.bracket(e, f) == h
        assert model.bracket(h, e) == {k: 2 * v for k, v in e.items()}
        assert model.bracket(h, f) == {k: -2 * v for k, v in f.items()}


def test_oracle_rejects_bad_weights():
    t = SimpleType("A", 2)
    model = build_chevalley(t)
    with pytest.raises(ValueError):
        is_characteristic(model, WeightedDiagram(t, (Q(1, 2), Q(0))))
    with pytest.raises(ValueError):
        is_characteristic(model, WeightedDiagram(SimpleType("A", 1), (Q(2),)))


def test_grading_consistency():
    # a nonzero accepted diagram always has a nonempty degree-2 layer
    t = SimpleType("B", 3)
    model = build_chevalley(t)
    for od in enumerate_complex_characteristics(t):
        if od.diagram.is_zero():
            continue
        ok, _ = is_characteristic(model, od.diagram)
        assert ok
        r2 = [
            beta
            for beta in model.roots
            if sum(m * int(wt) for m, wt in zip(beta, od.diagram.weights)) == 2
        ]
        assert r2


@pytest.mark.parametrize("rank", [6, 7, 8])
def test_every_embedded_e_table_row_is_certified(rank):
    """Positive certification of the E-type tables in their full models.

    Together with the distinctness and row-count assertions this pins the
    embedded data: a set of pairwise-distinct certified diagrams of the known
    cardinality must be the complete characteristic set.
    """
    t = SimpleType("E", rank)
    model = build_chevalley(t, max_rank=8)
    for od in enumerate_complex_characteristics(t):
        ok, witness = is_characteristic(model, od.diagram)
        assert ok, od.label
        assert witness is not None


@pytest.mark.parametrize("fam,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_oracle_agrees_with_enumeration(fam, rank):
    t = SimpleType(fam, rank)
    model = build_chevalley(t)
    expected = {tuple(int(x) for x in od.diagram.weights) for od in enumerate_complex_characteristics(t)}
    accepted = set()
    for bits in product((0, 1, 2), repeat=rank):
        d = WeightedDiagram(t, tuple(Q(b) for b in bits))
        ok, _ = is_characteristic(model, d)
        if ok:
            accepted.add(bits)
    assert accepted == expected
