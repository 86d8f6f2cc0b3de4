"""Necessary conditions for a finite-dimensional Nichols algebra.

Every rule is a pure predicate on exact braiding data.  A rule either rules the
braiding out (RULED_OUT), lets it through (CANDIDATE), or, for triangles whose
edges carry different labels, declines to decide (UNRESOLVED).  A subdiagram of
a finite-type braiding is of finite type, so every rule may be applied to any
sub-braiding.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd

import networkx as nx

from .braid import BraidingMatrix, DynkinDiagram, dynkin
from .chars import RootOfUnity

RULED_OUT, CANDIDATE, UNRESOLVED = "RULED_OUT", "CANDIDATE", "UNRESOLVED"

VERTEX_ONE = "vertex-one"
RANK2 = "rank2-table"
POTINV_POWER = "potinv-power"
POTINV_INVERSE = "potinv-inverse"
TRIANGLE = "triangle"
LONG_CYCLE = "long-cycle"
CRITERIA = (VERTEX_ONE, RANK2, POTINV_POWER, POTINV_INVERSE, TRIANGLE, LONG_CYCLE)


@dataclass(frozen=True)
class CriterionVerdict:
    outcome: str
    criterion: str
    detail: str = ""
    witness: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.outcome not in (RULED_OUT, CANDIDATE, UNRESOLVED):
            raise ValueError(f"bad outcome {self.outcome!r}")
        if self.outcome == RULED_OUT and (not self.criterion or not self.witness):
            raise ValueError("a RULED_OUT verdict needs a criterion and a witness")

    @property
    def ruled_out(self) -> bool:
        return self.outcome == RULED_OUT

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "criterion": self.criterion, "detail": self.detail, "witness": self.witness}


def _ok(criterion, detail="", **witness):
    return CriterionVerdict(CANDIDATE, criterion, detail, witness)


def _out(criterion, detail, **witness):
    return CriterionVerdict(RULED_OUT, criterion, detail, witness)


def vertex_one_rule(Q: BraidingMatrix) -> CriterionVerdict:
    for i, v in enumerate(Q.diagonal()):
        if v.is_one:
            return _out(VERTEX_ONE, "a vertex is labelled 1", vertex=i, label=str(v))
    return _ok(VERTEX_ONE)


# -- rank two ----------------------------------------------------------------

RANK2_ROWS = {
    1: "disconnected, any vertex label",
    2: "zeta = a, mu = a^-1, a != 1",
    3: "zeta = -1, mu = a, a != 1, -1",
    4: "zeta = -a^-2, mu = -a^3, a in R12",
    5: "zeta = -a^-2, mu = a, a in R12",
}


def rank2_rows(zeta: RootOfUnity, mu: RootOfUnity | None) -> list[int]:
    """Rows of the rank-two table matching the diagram zeta --mu-- zeta."""
    if mu is not None and mu.is_one:
        mu = None
    if mu is None:
        return [1]
    rows = []
    if not zeta.is_one and (zeta * mu).is_one:
        rows.append(2)
    if zeta.is_minus_one and not mu.is_minus_one:
        rows.append(3)
    # over a in R12, -a^-2 runs through R3 and -a^3 through R4 independently
    if zeta.in_R(3) and mu.in_R(4):
        rows.append(4)
    if mu.in_R(12) and zeta == -(mu ** -2):
        rows.append(5)
    return rows


@lru_cache(maxsize=None)
def rank2_symmetric(zeta: RootOfUnity, mu: RootOfUnity | None = None) -> CriterionVerdict:
    """Two vertices labelled zeta joined by an edge mu (None: no edge)."""
    w = {"zeta": str(zeta), "mu": None if mu is None or mu.is_one else str(mu)}
    if zeta.is_one:
        return _out(VERTEX_ONE, "a vertex is labelled 1", **w)
    rows = rank2_rows(zeta, mu)
    if rows:
        return _ok(RANK2, f"row {rows[0]}: {RANK2_ROWS[rows[0]]}", **w)
    return _out(RANK2, "no row of the rank-two table matches", **w)


# -- powers and inverses -----------------------------------------------------

def potinv_power(
    alpha: RootOfUnity, n: int, squares_distinct: bool, order_g: int | None = None
) -> CriterionVerdict:
    """g conjugate to g^n != g, alpha = chi(g).

    With g^(n^2) != g the subset {g, g^n, g^(n^2)} forces alpha = -1.
    Otherwise {g, g^n} has q = (alpha, alpha^(1/n); alpha^n, alpha), which must
    pass the rank-two table, and alpha must be -1 or lie in R3.
    """
    w = {"alpha": str(alpha), "n": n, "squares_distinct": squares_distinct}
    if order_g is not None:
        if n % order_g == 1 % order_g:
            raise ValueError("g^n = g: not a power pair")
        if order_g % alpha.order:
            raise ValueError(f"alpha of order {alpha.order} cannot be a value at g of order {order_g}")
    if gcd(n, alpha.order) != 1:
        raise ValueError("n must be a unit modulo the order of alpha")
    if squares_distinct:
        if alpha.is_minus_one:
            return _ok(POTINV_POWER, "three distinct powers, alpha = -1", **w)
        return _out(POTINV_POWER, "three distinct powers force alpha = -1", **w)
    n_inv = pow(n, -1, alpha.order) if alpha.order > 1 else 0
    mu = (alpha ** n_inv) * (alpha ** n)
    pair = rank2_symmetric(alpha, mu)
    if pair.ruled_out:
        return _out(POTINV_POWER, f"pair {{g, g^n}}: {pair.detail}", mu=str(mu), **w)
    if not (alpha.is_minus_one or alpha.in_R(3)):
        return _out(POTINV_POWER, "alpha must be -1 or a primitive cube root of 1", **w)
    return _ok(POTINV_POWER, pair.detail, **w)


def inverse_rule(alpha: RootOfUnity, order_g: int) -> CriterionVerdict:
    """g conjugate to g^-1 != g: needs |g| even and alpha = -1."""
    if order_g <= 2:
        raise ValueError("g = g^-1: not an inverse pair")
    w = {"alpha": str(alpha), "order": order_g}
    if order_g % 2:
        return _out(POTINV_INVERSE, "g has odd order", **w)
    if not alpha.is_minus_one:
        return _out(POTINV_INVERSE, "q_T must be all -1", **w)
    return _ok(POTINV_INVERSE, "|g| even and q_T all -1", **w)


# -- three or more vertices --------------------------------------------------

def triangle_rule(alpha: RootOfUnity, beta: RootOfUnity) -> CriterionVerdict:
    """Uniform triangle: vertices alpha, edges beta."""
    w = {"alpha": str(alpha), "beta": str(beta)}
    if alpha.is_minus_one and beta.in_R(3):
        return _ok(TRIANGLE, "alpha = -1, beta in R3", **w)
    return _out(TRIANGLE, "a triangle needs alpha = -1 and beta in R3", **w)


def triangles(D: DynkinDiagram) -> list[tuple[int, int, int]]:
    G = D.graph()
    return [t for t in combinations(range(len(D.vertices)), 3)
            if G.has_edge(t[0], t[1]) and G.has_edge(t[1], t[2]) and G.has_edge(t[0], t[2])]


def _canonical_cycle(cycle: list[int]) -> list[int]:
    k = cycle.index(min(cycle))
    c = cycle[k:] + cycle[:k]
    return c if c[1] < c[-1] else [c[0]] + c[:0:-1]


def find_long_cycle(G: nx.Graph) -> list[int] | None:
    """Some simple cycle with at least four vertices, or None.

    Such a cycle exists iff a biconnected component has four or more vertices.
    """
    for comp in sorted(nx.biconnected_components(G), key=lambda c: sorted(c)):
        if len(comp) < 4:
            continue
        H = G.subgraph(sorted(comp))
        for bound in range(4, len(comp) + 1):
            for cyc in nx.simple_cycles(H, length_bound=bound):
                if len(cyc) >= 4:
                    return _canonical_cycle(list(cyc))
    return None


def long_cycle_rule(D: DynkinDiagram) -> CriterionVerdict:
    cyc = find_long_cycle(D.graph())
    if cyc is None:
        return _ok(LONG_CYCLE, "no cycle of length >= 4")
    return _out(LONG_CYCLE, f"cycle of length {len(cyc)}", cycle=cyc)


def screen_braiding(Q: BraidingMatrix) -> CriterionVerdict:
    """All rank-two, triangle and long-cycle rules on one diagonal braiding."""
    v = vertex_one_rule(Q)
    if v.ruled_out:
        return v
    D = dynkin(Q)
    zeta = D.vertices[0] if D.vertices else None
    for i, j in combinations(range(Q.size), 2):
        if Q[i, i] != Q[j, j]:
            continue  # the rank-two table only covers equal vertex labels
        v = rank2_symmetric(Q[i, i], D.edge_label(i, j))
        if v.ruled_out:
            return CriterionVerdict(v.outcome, v.criterion, v.detail, {**v.witness, "pair": [i, j]})
    v = long_cycle_rule(D)
    if v.ruled_out:
        return v
    pending = []
    for t in triangles(D):
        labels = {D.vertices[k] for k in t}
        edges = {D.edge_label(a, b) for a, b in combinations(t, 2)}
        if len(labels) == 1 and len(edges) == 1:
            v = triangle_rule(labels.pop(), edges.pop())
            if v.ruled_out:
                return CriterionVerdict(v.outcome, v.criterion, v.detail, {**v.witness, "triangle": list(t)})
        else:
            pending.append(list(t))
    if pending:
        return CriterionVerdict(UNRESOLVED, TRIANGLE, "triangle with unequal labels", {"triangles": pending})
    return _ok(RANK2 if zeta is not None else VERTEX_ONE, "no rule fires")
