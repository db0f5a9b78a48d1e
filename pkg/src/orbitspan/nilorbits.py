"""Weighted Dynkin diagrams of complex nilpotent orbits: partition recipes for
the classical types, embedded tables for the exceptional types."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from itertools import groupby
from typing import Optional

from . import exceptional_data
from .rootcore import SimpleType, WeightedDiagram

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL = ("E", "F", "G")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> list[tuple[int, int]]:
        return [(part, len(list(grp))) for part, grp in groupby(self.parts)]

    def __str__(self) -> str:
        pieces = []
        for part, mult in self.multiplicities():
            pieces.append(f"{part}^{mult}" if mult > 1 else f"{part}")
        return "[" + ",".join(pieces) + "]"


@dataclass(frozen=True)
class ClassicalLabel:
    partition: Partition
    very_even_tag: Optional[str] = None  # 'I' or 'II' for type-D very even partitions

    def __post_init__(self):
        if self.very_even_tag not in (None, "I", "II"):
            raise ValueError("tag must be None, 'I' or 'II'")

    def __str__(self) -> str:
        tag = f"_{self.very_even_tag}" if self.very_even_tag else ""
        return f"{self.partition}{tag}"


@dataclass(frozen=True)
class ExceptionalLabel:
    name: str  # Bala-Carter name, e.g. "2A_2", "E_8(a_1)"

    def __str__(self) -> str:
        return self.name


OrbitLabel = ClassicalLabel | ExceptionalLabel


@dataclass(frozen=True)
class OrbitDiagram:
    """A weighted Dynkin diagram tagged with its complex-orbit label."""

    label: OrbitLabel
    diagram: WeightedDiagram

    def __post_init__(self):
        for w in self.diagram.weights:
            if w.denominator != 1 or w < 0 or w > 2:
                raise ValueError(f"orbit diagram weights must be 0, 1 or 2; got {w}")


@lru_cache(maxsize=None)
def _partitions_of(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n with parts <= max_part, lexicographically descending."""
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def defining_size(t: SimpleType) -> int:
    """Size of the partitions classifying nilpotent orbits for a classical type."""
    if t.family == "A":
        return t.rank + 1
    if t.family == "B":
        return 2 * t.rank + 1
    if t.family in ("C", "D"):
        return 2 * t.rank
    raise ValueError(f"{t} is not classical; use exceptional_table")


def _parity_ok(parts: tuple[int, ...], family: str) -> bool:
    if family == "A":
        return True
    for part, mult in [(p, len(list(g))) for p, g in groupby(parts)]:
        if family in ("B", "D") and part % 2 == 0 and mult % 2 == 1:
            return False
        if family == "C" and part % 2 == 1 and mult % 2 == 1:
            return False
    return True


def classical_partitions(t: SimpleType) -> list[Partition]:
    """Partitions labelling the nilpotent orbits of a classical type, in
    lexicographically descending order (each exactly once, very even untagged)."""
    if t.family not in CLASSICAL:
        raise ValueError(f"{t} is exceptional; use exceptional_table")
    n = defining_size(t)
    return [
        Partition(p) for p in _partitions_of(n, n) if _parity_ok(p, t.family)
    ]


def is_very_even(t: SimpleType, p: Partition) -> bool:
    return t.family == "D" and all(part % 2 == 0 for part in p.parts)


def _h_values(p: Partition) -> list[int]:
    """Pooled sl2 eigenvalues: each part m contributes m-1, m-3, ..., 1-m."""
    values = []
    for part in p.parts:
        values.extend(range(part - 1, -part, -2))
    values.sort(reverse=True)
    return values


def diagram_of_partition(
    t: SimpleType, p: Partition, tag: Optional[str] = None
) -> OrbitDiagram:
    """Weighted Dynkin diagram of the orbit labelled by a partition.

    The dominant pooled eigenvalues h_1 >= ... give chain weights h_i - h_{i+1};
    type B ends with h_l, type C with 2*h_l, and type D assigns the fork pair
    h_{l-1} -+ h_l with tag I putting h_{l-1}+h_l on the lower node a_l.
    """
    if t.family not in CLASSICAL:
        raise ValueError(f"{t} is exceptional; use exceptional_table")
    if p.size != defining_size(t):
        raise ValueError(f"partition {p} has size {p.size}, expected {defining_size(t)} for {t}")
    if not _parity_ok(p.parts, t.family):
        raise ValueError(f"partition {p} violates the parity constraint for type {t.family}")
    very_even = is_very_even(t, p)
    if very_even and tag not in ("I", "II"):
        raise ValueError(f"very even partition {p} needs tag 'I' or 'II'")
    if not very_even and tag is not None:
        raise ValueError(f"partition {p} is not very even; no tag allowed")

    l = t.rank
    h = _h_values(p)
    if t.family == "A":
        weights = [Q(h[i] - h[i + 1]) for i in range(l)]
        return OrbitDiagram(ClassicalLabel(p), WeightedDiagram(t, tuple(weights)))

    top = h[:l]
    weights = [Q(top[i] - top[i + 1]) for i in range(l - 1)]
    if t.family == "B":
        weights.append(Q(top[l - 1]))
    elif t.family == "C":
        weights.append(Q(2 * top[l - 1]))
    else:  # D
        upper = Q(top[l - 2] - top[l - 1])
        lower = Q(top[l - 2] + top[l - 1])
        if tag == "II":
            upper, lower = lower, upper
        weights[l - 2] = upper
        weights.append(lower)
    label = ClassicalLabel(p, tag)
    return OrbitDiagram(label, WeightedDiagram(t, tuple(weights)))


def exceptional_table(t: SimpleType) -> list[OrbitDiagram]:
    """The full Bala-Carter-labelled diagram list for an exceptional type."""
    if t.family not in EXCEPTIONAL:
        raise ValueError(f"{t} is classical; use classical_partitions")
    rows = exceptional_data.TABLES[str(t)]
    return [
        OrbitDiagram(ExceptionalLabel(name), WeightedDiagram(t, tuple(Q(w) for w in weights)))
        for name, weights in rows
    ]


@lru_cache(maxsize=None)
def enumerate_complex_characteristics(t: SimpleType) -> tuple[OrbitDiagram, ...]:
    """All weighted Dynkin diagrams of complex nilpotent orbits for the type,
    in the canonical order used for deterministic greedy bases."""
    if t.family in EXCEPTIONAL:
        return tuple(exceptional_table(t))
    out = []
    for p in classical_partitions(t):
        if is_very_even(t, p):
            out.append(diagram_of_partition(t, p, "I"))
            out.append(diagram_of_partition(t, p, "II"))
        else:
            out.append(diagram_of_partition(t, p))
    return tuple(out)


def orbit_diagram_json(od: OrbitDiagram) -> dict:
    return {"label": str(od.label), "weights": [str(w) if w.denominator != 1 else w.numerator for w in od.diagram.weights]}
