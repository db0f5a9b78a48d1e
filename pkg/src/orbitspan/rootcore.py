"""Root systems of complex simple Lie algebras, the longest-element action and
the opposition involution on the Dynkin diagram.

Node ordering convention (frozen; every table in this package depends on it):
  A/B/C chains a_1..a_l left to right; D has the chain a_1..a_{l-2} with fork
  nodes a_{l-1} (upper) and a_l (lower); E6 is the chain a_1..a_5 with a_6 on
  a_3; E7 the chain a_1..a_6 with a_7 on a_4; E8 the chain a_1..a_7 with a_8 on
  a_5; F4 is a_1 - a_2 => a_3 - a_4; G2 is a_1 => a_2 (a_1 long, a_2 short).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

from .rational import RationalSubspace, Vec

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}

# number of positive roots per family, used as an independent count check
POSITIVE_ROOT_COUNTS = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    """A complex simple Lie algebra type, e.g. SimpleType('D', 5)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        rank = self.rank
        if self.family in _MIN_RANK:
            low = _MIN_RANK[self.family]
            if rank < low:
                hint = ""
                if self.family == "B" and rank == 1:
                    hint = " (B_1 is excluded; use A_1)"
                elif self.family == "C" and rank == 1:
                    hint = " (C_1 is excluded; use A_1)"
                elif self.family == "D" and rank == 3:
                    hint = " (D_3 is excluded; use A_3)"
                elif self.family == "D" and rank == 2:
                    hint = " (D_2 is not simple)"
                raise ValueError(f"{self.family}_{rank} is not supported{hint}")
        elif self.family == "E":
            if rank not in (6, 7, 8):
                raise ValueError(f"E_{rank} does not exist; rank must be 6, 7 or 8")
        elif self.family == "F":
            if rank != 4:
                raise ValueError("F family has rank 4 only")
        elif self.family == "G":
            if rank != 2:
                raise ValueError("G family has rank 2 only")
        if rank < 1:
            raise ValueError("rank must be positive")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(rank - 1)]


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix A with A[i][j] = <alpha_j, alpha_i^vee> in the frozen node order."""
    l = t.rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if t.family == "A":
        for i, j in _chain_edges(l):
            bond(i, j)
    elif t.family == "B":
        for i, j in _chain_edges(l - 1):
            bond(i, j)
        bond(l - 2, l - 1, -1, -2)  # a_l short
    elif t.family == "C":
        for i, j in _chain_edges(l - 1):
            bond(i, j)
        bond(l - 2, l - 1, -2, -1)  # a_l long
    elif t.family == "D":
        for i, j in _chain_edges(l - 1):
            bond(i, j)
        bond(l - 3, l - 1)  # lower fork a_l attaches to a_{l-2}
    elif t.family == "E":
        branch = {6: (2, 5), 7: (3, 6), 8: (4, 7)}[l]
        for i, j in _chain_edges(l - 1):
            bond(i, j)
        bond(*branch)
    elif t.family == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # a_1, a_2 long; a_3, a_4 short
        bond(2, 3)
    elif t.family == "G":
        bond(0, 1, -1, -3)  # a_1 long, a_2 short
    return tuple(tuple(row) for row in a)


def simple_root_norms(t: SimpleType) -> tuple[Q, ...]:
    """Squared lengths (alpha_i, alpha_i), from the symmetrizer of the Cartan matrix."""
    a = cartan_matrix(t)
    l = t.rank
    d = [Q(0)] * l
    d[0] = Q(1)
    changed = True
    while changed:
        changed = False
        for i in range(l):
            if d[i] == 0:
                continue
            for j in range(l):
                if a[i][j] != 0 and d[j] == 0:
                    # d_i * a_ij = d_j * a_ji
                    d[j] = d[i] * a[i][j] / a[j][i]
                    changed = True
    scale = min(d)
    return tuple(2 * x / scale for x in d)


@dataclass(frozen=True)
class RootSystemData:
    """Cartan matrix plus the positive roots in the simple-root basis."""

    simple_type: SimpleType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    node_labels: tuple[str, ...]

    @property
    def rank(self) -> int:
        return self.simple_type.rank


def _reflect(root: tuple[int, ...], i: int, a) -> tuple[int, ...]:
    """Simple reflection s_i applied to a root in simple-root coordinates."""
    pairing = sum(m * a[i][j] for j, m in enumerate(root))
    out = list(root)
    out[i] -= pairing
    return tuple(out)


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystemData:
    """Generate the positive roots by closing the simple roots under reflections."""
    l = t.rank
    a = cartan_matrix(t)
    simples = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(l):
                image = _reflect(root, i, a)
                if image not in roots:
                    roots.add(image)
                    nxt.append(image)
        frontier = nxt
    positives = sorted(
        (r for r in roots if all(c >= 0 for c in r)),
        key=lambda r: (sum(r), r),
    )
    labels = tuple(f"a{i + 1}" for i in range(l))
    return RootSystemData(t, a, tuple(positives), labels)


@dataclass(frozen=True)
class WeightedDiagram:
    """Weights on the Dynkin diagram nodes: the Psi-coordinates of a Cartan element."""

    simple_type: SimpleType
    weights: Vec

    def __post_init__(self):
        if len(self.weights) != self.simple_type.rank:
            raise ValueError("weight count does not match rank")
        object.__setattr__(self, "weights", tuple(Q(w) for w in self.weights))

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.weights)


@dataclass(frozen=True)
class DiagramInvolution:
    """A self-inverse node permutation preserving the Cartan matrix (0-based)."""

    simple_type: SimpleType
    permutation: tuple[int, ...]

    def __post_init__(self):
        perm = self.permutation
        if sorted(perm) != list(range(self.simple_type.rank)):
            raise ValueError("not a permutation of the nodes")
        if any(perm[perm[i]] != i for i in range(len(perm))):
            raise ValueError("permutation is not an involution")
        a = cartan_matrix(self.simple_type)
        for i in range(len(perm)):
            for j in range(len(perm)):
                if a[i][j] != a[perm[i]][perm[j]]:
                    raise ValueError("permutation does not preserve the Cartan matrix")

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.permutation))

    def apply(self, d: WeightedDiagram) -> WeightedDiagram:
        w = d.weights
        return WeightedDiagram(d.simple_type, tuple(w[self.permutation[i]] for i in range(len(w))))


def _dominantize(psi: list[Q], a) -> list[Q]:
    """Carry a vector (in Psi-coordinates) into the closed dominant chamber."""
    l = len(psi)
    psi = list(psi)
    while True:
        i = next((k for k in range(l) if psi[k] < 0), None)
        if i is None:
            return psi
        # s_i in Psi-coordinates: psi_j -= psi_i * A[j][i]
        pi = psi[i]
        for j in range(l):
            psi[j] -= pi * a[j][i]
    return psi


@lru_cache(maxsize=None)
def opposition_involution(rs: RootSystemData) -> DiagramInvolution:
    """The node permutation induced by -w0: computed by carrying each negated
    fundamental weight to the dominant chamber by simple reflections."""
    l = rs.rank
    a = rs.cartan_matrix
    perm = []
    for i in range(l):
        psi = [Q(0)] * l
        psi[i] = Q(-1)
        image = _dominantize(psi, a)
        ones = [j for j in range(l) if image[j] != 0]
        if len(ones) != 1 or image[ones[0]] != 1:
            raise AssertionError("dominantized negated fundamental weight is not fundamental")
        perm.append(ones[0])
    return DiagramInvolution(rs.simple_type, tuple(perm))


def iota_fixed_subspace(rs: RootSystemData) -> RationalSubspace:
    """Diagram-space subspace cut out by weight(n) = weight(iota(n))."""
    l = rs.rank
    iota = opposition_involution(rs).permutation
    constraints = []
    for i in range(l):
        j = iota[i]
        if j > i:
            row = [Q(0)] * l
            row[i] = Q(1)
            row[j] = Q(-1)
            constraints.append(row)
    return RationalSubspace.from_constraints(l, constraints)


def root_pairing(root: tuple[int, ...], diagram: WeightedDiagram) -> Q:
    """Value beta(H) for the Cartan element H with Psi-coordinates `diagram`."""
    return sum(Q(m) * w for m, w in zip(root, diagram.weights))


def dominantize_weights(t: SimpleType, weights) -> Vec:
    """Dominant chamber representative of a weight vector in Psi-coordinates."""
    a = cartan_matrix(t)
    return tuple(_dominantize([Q(w) for w in weights], a))
