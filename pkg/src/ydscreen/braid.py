"""Diagonal braidings on commuting subsets of a conjugacy class.

For a class C with base point g, coset representatives x_i (x_i g x_i^-1 = g_i)
and a character chi of the centralizer Z_g, a pairwise commuting subset T of C
carries the diagonal braiding

    q_ij = chi(x_j^-1 g_i x_j),

whose Dynkin diagram has vertex labels q_ii and an edge {i, j} labelled
q_ij q_ji whenever that product is not 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import networkx as nx

from .chars import Character, RootOfUnity
from .grp2 import ConjClass, Mat2


@dataclass(frozen=True, eq=False)
class CommutingSubset:
    cls: ConjClass = field(repr=False)
    indices: tuple[int, ...]

    def __post_init__(self):
        G = self.cls.group
        els = self.elements
        for i, a in enumerate(els):
            for b in els[i + 1:]:
                if G.mul(a, b) != G.mul(b, a):
                    raise ValueError("subset is not pairwise commuting")

    @property
    def elements(self) -> list[Mat2]:
        return [self.cls.elements[i] for i in self.indices]

    def __len__(self):
        return len(self.indices)

    def __eq__(self, other):
        return isinstance(other, CommutingSubset) and other.cls is self.cls and other.indices == self.indices

    def __hash__(self):
        return hash((id(self.cls), self.indices))

    def subset(self, positions: Sequence[int]) -> "CommutingSubset":
        """Sub-clique made of the given positions (not class indices)."""
        return CommutingSubset(self.cls, tuple(self.indices[k] for k in positions))


@dataclass(frozen=True)
class BraidingMatrix:
    values: tuple[tuple[RootOfUnity, ...], ...]
    indices: tuple[int, ...] = ()
    character: Character | None = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.values)

    def __getitem__(self, ij) -> RootOfUnity:
        i, j = ij
        return self.values[i][j]

    def diagonal(self) -> list[RootOfUnity]:
        return [self.values[i][i] for i in range(self.size)]

    def principal(self, positions: Sequence[int]) -> "BraidingMatrix":
        idx = tuple(self.indices[k] for k in positions) if self.indices else ()
        return BraidingMatrix(
            tuple(tuple(self.values[i][j] for j in positions) for i in positions), idx, self.character
        )

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.values]

    @classmethod
    def from_json(cls, rows) -> "BraidingMatrix":
        return cls(tuple(tuple(RootOfUnity.parse(x) for x in row) for row in rows))


@dataclass(frozen=True)
class DynkinDiagram:
    vertices: tuple[RootOfUnity, ...]
    edges: tuple[tuple[int, int, RootOfUnity], ...]

    def __post_init__(self):
        for _, _, lab in self.edges:
            if lab.is_one:
                raise ValueError("an edge can never carry the label 1")

    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.vertices)))
        for i, j, lab in self.edges:
            G.add_edge(i, j, label=lab)
        return G

    def edge_label(self, i: int, j: int) -> RootOfUnity | None:
        """Label of the edge {i, j}, or None when there is no edge."""
        i, j = min(i, j), max(i, j)
        for a, b, lab in self.edges:
            if (a, b) == (i, j):
                return lab
        return None

    def to_json(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "edges": [[i, j, str(lab)] for i, j, lab in self.edges],
        }


class PowerPair(NamedTuple):
    index: int               # class index of the base point g
    n: int                   # g^n lies in the class and differs from g
    squares_distinct: bool   # g^(n^2) != g
    inverse: bool            # g^n = g^-1
    order: int               # |g|


def commuting_cliques(C: ConjClass) -> list[CommutingSubset]:
    """The sets C ∩ Z(h), h in C, deduplicated and sorted.

    Each is a clique of the commuting graph because Z(h) is abelian; building
    the centralizer structure raises if that ever fails.
    """
    if C.is_central:
        raise ValueError("central classes are screened through their scalar")
    C.centralizer_struct  # asserts Z_g is abelian
    G = C.group
    g = C.representative
    base = [i for i, h in enumerate(C.elements) if G.mul(g, h) == G.mul(h, g)]
    seen: dict[tuple[int, ...], None] = {}
    for x in C.coset_reps:
        xi = G.inv(x)
        idx = tuple(sorted(C.index[G.mul(G.mul(x, C.elements[i]), xi)] for i in base))
        seen.setdefault(idx, None)
    return [CommutingSubset(C, idx) for idx in sorted(seen)]


def clique_through(C: ConjClass, i: int | None = None) -> CommutingSubset:
    """C ∩ Z(g_i); the base point by default."""
    G = C.group
    h = C.representative if i is None else C.elements[i]
    return CommutingSubset(C, tuple(k for k, e in enumerate(C.elements) if G.mul(h, e) == G.mul(e, h)))


def braiding_coordinates(C: ConjClass, T: CommutingSubset, coset_reps: Sequence[Mat2] | None = None):
    """Centralizer coordinates of x_j^-1 g_i x_j for i, j in T.

    This is the character-independent part of the braiding matrix.
    """
    G = C.group
    A = C.centralizer_struct
    reps = C.coset_reps if coset_reps is None else coset_reps
    rows = []
    for i in T.indices:
        gi = C.elements[i]
        row = []
        for j in T.indices:
            x = reps[j]
            y = G.mul(G.mul(G.inv(x), gi), x)
            if y not in A:
                raise ValueError(f"x_{j}^-1 g_{i} x_{j} is not in the centralizer")
            row.append(A.coords(y))
        rows.append(tuple(row))
    return tuple(rows)


def braiding_from_coordinates(coords, chi: Character, indices=()) -> BraidingMatrix:
    return BraidingMatrix(tuple(tuple(chi.at_coords(c) for c in row) for row in coords), tuple(indices), chi)


def braiding_matrix(
    C: ConjClass, chi: Character, T: CommutingSubset, coset_reps: Sequence[Mat2] | None = None
) -> BraidingMatrix:
    """q_ij = chi(x_j^-1 g_i x_j) on the commuting subset T."""
    if chi.group is not C.centralizer_struct:
        raise ValueError("chi is not a character of this class's centralizer")
    if coset_reps is not None:
        G = C.group
        for g, x in zip(C.elements, coset_reps):
            if G.conj(x, C.representative) != g:
                raise ValueError("coset representatives do not map the base point onto the class")
    return braiding_from_coordinates(braiding_coordinates(C, T, coset_reps), chi, T.indices)


def power_pairs(C: ConjClass) -> list[PowerPair]:
    """Every n in [2, |g|) with g^n in C and g^n != g, for the base point g."""
    if C.is_central:
        return []
    G = C.group
    g = C.representative
    m = G.order_of(g)
    powers = [G.identity]
    for _ in range(m - 1):
        powers.append(G.mul(powers[-1], g))
    g_inv = powers[m - 1]
    base = C.index[g]
    out = []
    for n in range(2, m):
        h = powers[n]
        if h == g or h not in C.index:
            continue
        out.append(PowerPair(base, n, powers[n * n % m] != g, h == g_inv, m))
    return out


def dynkin(Q: BraidingMatrix) -> DynkinDiagram:
    k = Q.size
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            lab = Q[i, j] * Q[j, i]
            if not lab.is_one:
                edges.append((i, j, lab))
    return DynkinDiagram(tuple(Q.diagonal()), tuple(edges))


def central_scalar_braiding(C: ConjClass, scalar: RootOfUnity) -> BraidingMatrix:
    """A central class acts by scalar * flip; recorded as the 1x1 matrix [scalar]."""
    if not C.is_central:
        raise ValueError(f"class {C.label} is not central")
    return BraidingMatrix(((scalar,),), (0,))
