"""The matching filter, span checks and per-form verification reports: the
weighted diagrams of nilpotent orbits that match a real form's Satake diagram
must span exactly the (-w0)-fixed subspace."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Optional, Sequence

from .nilorbits import (
    ClassicalLabel,
    ExceptionalLabel,
    OrbitDiagram,
    OrbitLabel,
    Partition,
    diagram_of_partition,
    enumerate_complex_characteristics,
)
from .rational import RationalSubspace
from .rootcore import (
    SimpleType,
    WeightedDiagram,
    build_root_system,
    opposition_involution,
)
from .satake import (
    RealFormLabel,
    SatakeDiagram,
    b_subspace,
    matches,
    satake_catalog,
    split_label_of,
    underlying_type,
)


@dataclass(frozen=True)
class VerificationReport:
    label: RealFormLabel
    simple_type: SimpleType
    matching_orbits: tuple[OrbitDiagram, ...]
    dim_b: int
    dim_span: int
    theorem_holds: bool
    greedy_basis: tuple[OrbitLabel, ...]
    easy_inclusion_holds: bool
    paper_basis_verified: Optional[bool]

    def to_json(self) -> dict:
        return {
            "label": str(self.label),
            "type": self.simple_type.family,
            "rank": self.simple_type.rank,
            "dim_b": self.dim_b,
            "dim_span": self.dim_span,
            "theorem_holds": self.theorem_holds,
            "easy_inclusion": self.easy_inclusion_holds,
            "basis": [str(lbl) for lbl in self.greedy_basis],
            "paper_basis_verified": self.paper_basis_verified,
        }


def filter_matching(diagrams: Iterable[OrbitDiagram], s: SatakeDiagram) -> list[OrbitDiagram]:
    """Keep the diagrams matching the Satake diagram, preserving input order."""
    return [od for od in diagrams if matches(od.diagram, s)]


def h_n_a_plus(label: RealFormLabel) -> list[OrbitDiagram]:
    """Orbit diagrams matching the form's Satake diagram; these are exactly the
    hyperbolic elements of the closed chamber coming from real sl2 embeddings,
    and their labels name the complex orbits meeting the real form."""
    t = underlying_type(label)
    return filter_matching(enumerate_complex_characteristics(t), satake_catalog(label))


def check_easy_inclusion(label: RealFormLabel) -> bool:
    """Every matching diagram is fixed by the opposition involution."""
    t = underlying_type(label)
    iota = opposition_involution(build_root_system(t))
    return all(iota.apply(od.diagram) == od.diagram for od in h_n_a_plus(label))


def span_of(diagrams: Sequence[WeightedDiagram]) -> RationalSubspace:
    """Canonical rational span of weighted diagrams (all of one type); the
    empty list gives the (degenerate, 0-dimensional) zero subspace."""
    types = {d.simple_type for d in diagrams}
    if len(types) > 1:
        raise ValueError(f"mixed simple types in span: {sorted(map(str, types))}")
    if not diagrams:
        return RationalSubspace.zero(0)
    l = next(iter(types)).rank
    return RationalSubspace.span_of(l, [d.weights for d in diagrams])


def greedy_basis_of(matching: Sequence[OrbitDiagram], l: int) -> tuple[list[OrbitLabel], RationalSubspace]:
    """First independent spanning subset in canonical enumeration order."""
    span = RationalSubspace.zero(l)
    picked: list[OrbitLabel] = []
    for od in matching:
        bigger = RationalSubspace.span_of(l, list(span.basis) + [od.diagram.weights])
        if bigger.dim > span.dim:
            span = bigger
            picked.append(od.label)
    return picked, span


def verify_theorem(label: RealFormLabel) -> VerificationReport:
    """Compare the span of the matching diagrams with the (-w0)-fixed subspace."""
    t = underlying_type(label)
    matching = h_n_a_plus(label)
    b = b_subspace(label)
    basis_labels, span = greedy_basis_of(matching, t.rank)
    holds = span == b
    try:
        paper_ok: Optional[bool] = verify_paper_basis(label)
    except LookupError:
        paper_ok = None
    return VerificationReport(
        label=label,
        simple_type=t,
        matching_orbits=tuple(matching),
        dim_b=b.dim,
        dim_span=span.dim,
        theorem_holds=holds,
        greedy_basis=tuple(basis_labels),
        easy_inclusion_holds=check_easy_inclusion(label),
        paper_basis_verified=paper_ok,
    )


def _cls(parts: Sequence[int], tag: Optional[str] = None) -> ClassicalLabel:
    return ClassicalLabel(Partition(tuple(parts)), tag)


def _one_plus(head: list[int], ones: int) -> list[int]:
    return head + [1] * ones


def paper_basis(label: RealFormLabel) -> list[OrbitLabel]:
    """The published example basis for the form, instantiated at its parameters.

    Raises LookupError for labels outside the published tables.
    """
    label = split_label_of(label)
    k, p = label.kind, label.params
    if k == "sl":
        n = p[0]
        out = [_cls(_one_plus([2 * s + 1], n - 1 - 2 * s)) for s in range(1, (n - 1) // 2 + 1)]
        if n % 2 == 0:
            out.append(_cls([n]))
        return out
    if k == "su*":
        kk = p[0] // 2
        out = [_cls(_one_plus([2 * s + 1] * 2, 2 * kk - 4 * s - 2)) for s in range(1, (kk - 1) // 2 + 1)]
        if kk % 2 == 0:
            out.append(_cls([kk, kk]))
        return out
    if k == "su":
        pp, q = p
        l = pp + q - 1
        if pp > q + 1:
            return [_cls(_one_plus([2 * s + 1], l - 2 * s)) for s in range(1, q + 1)]
        if pp == q + 1:
            return [_cls(_one_plus([2 * s + 1], 2 * q - 2 * s)) for s in range(1, q + 1)]
        out = [_cls(_one_plus([2 * s + 1], 2 * q - 1 - 2 * s)) for s in range(1, q)]
        out.append(_cls([2 * q]))
        return out
    if k == "so" and underlying_type(label).family == "B":
        q = p[1]
        l = (p[0] + q - 1) // 2
        return [_cls(_one_plus([2 * s + 1], 2 * l - 2 * s)) for s in range(1, q + 1)]
    if k == "spR":
        l = p[0]
        out = [_cls([2] * l if l > 1 else [2])]
        out.extend(_cls([2 * s + 2] + [2] * (l - s - 1)) for s in range(1, l))
        return out
    if k == "sp":
        pp, q = p
        l = pp + q
        if pp > q:
            return [_cls(_one_plus([2 * s + 1] * 2, 2 * l - 4 * s - 2)) for s in range(1, q + 1)]
        out = [_cls(_one_plus([2 * s + 1] * 2, 4 * q - 4 * s - 2)) for s in range(1, q)]
        out.append(_cls([2 * q, 2 * q]))
        return out
    if k == "so" and underlying_type(label).family == "D":
        pp, q = p
        l = (pp + q) // 2
        if pp > q + 2:
            return [_cls(_one_plus([2 * s + 1], 2 * l - 2 * s - 1)) for s in range(1, q + 1)]
        if pp == q + 2 or l % 2 == 1:  # so(l+1,l-1) and odd split so(l,l)
            return [_cls(_one_plus([2 * s + 1], 2 * l - 2 * s - 1)) for s in range(1, l)]
        out = [_cls(_one_plus([2 * s + 1], 2 * l - 2 * s - 1)) for s in range(1, l)]
        out.append(_cls([2] * l, "I"))
        return out
    if k == "so*":
        n = p[0] // 2
        if n % 2 == 0:
            m = n // 2
            out = [_cls(_one_plus([2 * s + 1] * 2, 4 * m - 4 * s - 2)) for s in range(1, m)]
            out.append(_cls([2] * (2 * m), "I"))
            return out
        m = (n - 1) // 2
        return [_cls(_one_plus([2 * s + 1] * 2, 4 * m - 4 * s)) for s in range(1, m + 1)]
    exceptional = {
        ("e6", (6,)): ["A_2", "2A_2", "D_4", "E_6"],
        ("e6", (2,)): ["A_2", "2A_2", "D_4", "E_6"],
        ("e6", (-14,)): ["A_2", "2A_2"],
        ("e6", (-26,)): ["2A_2"],
        ("e7", (7,)): ["(3A_1)''", "A_2", "2A_2", "D_4", "A_3+A_2+A_1", "A_4+A_2", "E_7"],
        ("e7", (-5,)): ["A_2", "2A_2", "D_4", "A_4+A_2"],
        ("e7", (-25,)): ["(3A_1)''", "A_2", "2A_2"],
        ("e8", (8,)): ["A_2", "2A_2", "D_4", "A_4+A_2", "D_4+A_2", "D_5+A_2", "E_8(a_1)", "E_8"],
        ("e8", (-24,)): ["A_2", "2A_2", "D_4", "A_4+A_2"],
        ("f4", (4,)): ["A_2", "Ã_2", "B_3", "F_4"],
        ("f4", (-20,)): ["Ã_2"],
        ("g2", (2,)): ["G_2(a_1)", "G_2"],
    }
    names = exceptional.get((k, tuple(p)))
    if names is None:
        raise LookupError(f"no published basis for {label}")
    return [ExceptionalLabel(name) for name in names]


def _diagram_for(t: SimpleType, lbl: OrbitLabel) -> OrbitDiagram:
    if isinstance(lbl, ClassicalLabel):
        return diagram_of_partition(t, lbl.partition, lbl.very_even_tag)
    for od in enumerate_complex_characteristics(t):
        if od.label == lbl:
            return od
    raise LookupError(f"{lbl} not found in the diagram table of {t}")


def verify_paper_basis(label: RealFormLabel) -> bool:
    """Published basis diagrams must match the Satake diagram, be independent,
    span the b-subspace and be even (all weights 0 or 2)."""
    t = underlying_type(label)
    s = satake_catalog(label)
    labels = paper_basis(label)
    diagrams = [_diagram_for(t, lbl) for lbl in labels]
    if not all(matches(od.diagram, s) for od in diagrams):
        return False
    if not all(w in (Q(0), Q(2)) for od in diagrams for w in od.diagram.weights):
        return False
    span = RationalSubspace.span_of(t.rank, [od.diagram.weights for od in diagrams])
    return span.dim == len(diagrams) and span == b_subspace(label)
