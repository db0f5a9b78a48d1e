"""The matching filter, spans, and per-form verification reports."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitspan.nilorbits import enumerate_complex_characteristics
from orbitspan.rational import vec
from orbitspan.rootcore import SimpleType, WeightedDiagram
from orbitspan.satake import catalog_labels, parse_label, satake_catalog, underlying_type
from orbitspan.spanverify import (
    check_easy_inclusion,
    filter_matching,
    h_n_a_plus,
    paper_basis,
    span_of,
    verify_paper_basis,
    verify_theorem,
)


def weights_of(matching):
    return {tuple(int(x) for x in od.diagram.weights) for od in matching}


def test_h_n_a_plus_split_form_keeps_everything():
    label = parse_label("g2(2)")
    assert len(h_n_a_plus(label)) == 5


def test_h_n_a_plus_f4_minus20():
    got = h_n_a_plus(parse_label("f4(-20)"))
    assert weights_of(got) == {(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2)}
    assert "Ã_2" in {str(od.label) for od in got}


def test_h_n_a_plus_e6_minus26():
    got = {str(od.label): tuple(int(x) for x in od.diagram.weights) for od in h_n_a_plus(parse_label("e6(-26)"))}
    assert got.get("2A_2") == (2, 0, 0, 0, 2, 0)
    assert "A_2" not in got  # weight 2 on the black node a_6


def test_zero_orbit_always_matches_and_never_in_basis():
    for text in ["su(4,2)", "so(7,2)", "e7(-25)", "sp(3,1)", "sl(4,R)"]:
        label = parse_label(text)
        report = verify_theorem(label)
        zeros = [od for od in report.matching_orbits if od.diagram.is_zero()]
        assert len(zeros) == 1
        assert zeros[0].label not in report.greedy_basis


def test_easy_inclusion_examples():
    for text in ["g2(2)", "f4(4)", "e6(6)", "e7(7)", "e8(8)", "sl(5,R)"]:
        assert check_easy_inclusion(parse_label(text))


def test_easy_inclusion_all_su_forms_to_rank_8():
    for n in range(2, 10):
        for q in range(1, n // 2 + 1):
            assert check_easy_inclusion(parse_label(f"su({n - q},{q})"))


def test_sl5_includes_the_31_1_diagram():
    got = h_n_a_plus(parse_label("sl(5,R)"))
    assert (2, 0, 0, 2) in weights_of(got)


def test_span_of_examples():
    g2 = SimpleType("G", 2)
    span = span_of([WeightedDiagram(g2, vec([2, 0])), WeightedDiagram(g2, vec([2, 2]))])
    assert span.dim == 2
    a3 = SimpleType("A", 3)
    span2 = span_of([WeightedDiagram(a3, vec([2, 0, 2])), WeightedDiagram(a3, vec([2, 2, 2]))])
    assert span2.dim == 2
    assert span_of([]).dim == 0
    with pytest.raises(ValueError):
        span_of([WeightedDiagram(g2, vec([2, 0])), WeightedDiagram(a3, vec([0, 0, 0]))])


def test_verify_theorem_examples():
    r = verify_theorem(parse_label("g2(2)"))
    assert (r.dim_b, r.dim_span, r.theorem_holds) == (2, 2, True)
    r = verify_theorem(parse_label("e8(-24)"))
    assert (r.dim_b, r.theorem_holds) == (4, True)
    for p, q in [(7, 2), (6, 1), (5, 3)]:
        r = verify_theorem(parse_label(f"su({p},{q})"))
        assert r.dim_b == q and r.theorem_holds


def test_report_invariants():
    for text in ["su(5,3)", "so(9,6)", "e7(-5)", "so*(12)"]:
        r = verify_theorem(parse_label(text))
        assert len(r.greedy_basis) == r.dim_span
        assert r.matching_orbits
        assert r.theorem_holds == (r.dim_span == r.dim_b)


def test_paper_basis_examples():
    assert [str(x) for x in paper_basis(parse_label("sp(4,R)"))] == [
        "[2^4]", "[4,2^2]", "[6,2]", "[8]"]
    assert [str(x) for x in paper_basis(parse_label("e7(7)"))] == [
        "(3A_1)''", "A_2", "2A_2", "D_4", "A_3+A_2+A_1", "A_4+A_2", "E_7"]
    assert [str(x) for x in paper_basis(parse_label("so*(14)"))] == [
        "[3^2,1^8]", "[5^2,1^4]", "[7^2]"]
    assert [str(x) for x in paper_basis(parse_label("so(6,6)"))] == [
        "[3,1^9]", "[5,1^7]", "[7,1^5]", "[9,1^3]", "[11,1]", "[2^6]_I"]
    assert [str(x) for x in paper_basis(parse_label("su*(8)"))] == ["[3^2,1^2]", "[4^2]"]


def test_verify_paper_basis_examples():
    for text in ["f4(4)", "e6(-14)", "g2(2)", "so(5,4)", "sp(3,3)", "su(4,4)", "so*(12)"]:
        assert verify_paper_basis(parse_label(text)), text


def test_paper_bases_verified_for_catalog_to_rank_8():
    for label in catalog_labels(8):
        assert verify_paper_basis(label), str(label)


def test_filter_ignores_appended_nonmatching_diagrams():
    label = parse_label("su(4,2)")
    t = underlying_type(label)
    s = satake_catalog(label)
    diagrams = list(enumerate_complex_characteristics(t))
    baseline = filter_matching(diagrams, s)
    nonmatching = [od for od in diagrams if od not in baseline]
    assert nonmatching
    assert filter_matching(diagrams + nonmatching, s) == baseline


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["su(3,2)", "sp(2,1)", "so(5,2)", "g2(2)"]), st.randoms())
def test_filter_idempotent_under_nonmatching_injection(text, rng):
    label = parse_label(text)
    t = underlying_type(label)
    s = satake_catalog(label)
    diagrams = list(enumerate_complex_characteristics(t))
    baseline = filter_matching(diagrams, s)
    extras = [od for od in diagrams if od not in baseline]
    noisy = list(diagrams)
    for od in extras:
        noisy.insert(rng.randrange(len(noisy) + 1), od)
    # inserting non-matching diagrams anywhere leaves the matching subsequence intact
    assert filter_matching(noisy, s) == baseline


def test_report_json_schema():
    r = verify_theorem(parse_label("e6(-14)")).to_json()
    assert set(r) == {
        "label", "type", "rank", "dim_b", "dim_span", "theorem_holds",
        "easy_inclusion", "basis", "paper_basis_verified",
    }
    assert r["label"] == "e6(-14)"
    assert r["type"] == "E" and r["rank"] == 6
    assert r["theorem_holds"] is True and r["paper_basis_verified"] is True
