"""SL(2, F_q) and GL(2, F_q): enumeration, conjugacy classes, centralizers.

Matrices are ``Mat2`` tuples of field-element labels (row-major).  Because a
label's numeric order is the lexicographic order of its coefficients, sorting
``Mat2`` tuples gives the canonical element order used for every witness.

Brute-force orbit computations are vectorised with numpy over the full group;
the closed-form class representatives are then matched against the orbits.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

import numpy as np

from .chars import AbelianStruct, abelian_structure, invariant_factors
from .ff import BoundError, ExtElem, FieldSpec, FqElem, QuadraticExtension

ORDER_BOUND = 50_000
SL2, GL2 = "SL2", "GL2"


class Mat2(NamedTuple):
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    field: FieldSpec

    def __post_init__(self):
        if self.kind not in (SL2, GL2):
            raise ValueError(f"unknown group kind {self.kind!r}")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def order(self) -> int:
        q = self.q
        return (q - 1) * q * (q + 1) * ((q - 1) if self.kind == GL2 else 1)

    @property
    def name(self) -> str:
        return f"{self.kind}(F_{self.q})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "q": self.q, "field": self.field.to_json()}


class MatrixGroup:
    """Element tables and vectorised products for one ``GroupSpec``."""

    def __init__(self, spec: GroupSpec, bound: int = ORDER_BOUND):
        if spec.order > bound:
            raise BoundError(f"|{spec.name}| = {spec.order} exceeds bound {bound}")
        self.spec = spec
        self.field = spec.field
        self.q = spec.q
        self.t = spec.field.tables
        self._build()

    def _build(self):
        q, t = self.q, self.t
        grid = np.indices((q, q, q, q)).reshape(4, -1).T
        a, b, c, d = grid.T
        det = t.sub_np[t.mul_np[a, d], t.mul_np[b, c]]
        keep = det == t.one if self.spec.kind == SL2 else det != t.zero
        self.array = np.ascontiguousarray(grid[keep])
        self.elements = [Mat2(*map(int, row)) for row in self.array]
        if len(self.elements) != self.spec.order:
            raise AssertionError("group order disagrees with the order formula")
        self.keys = self.encode(self.array)
        self.lookup = np.full(q**4, -1, dtype=np.int64)
        self.lookup[self.keys] = np.arange(len(self.elements))
        self.inv_array = self._invert(self.array)
        self.identity = Mat2(t.one, t.zero, t.zero, t.one)

    # -- vectorised helpers -------------------------------------------------
    def encode(self, arr: np.ndarray) -> np.ndarray:
        q = self.q
        return ((arr[:, 0] * q + arr[:, 1]) * q + arr[:, 2]) * q + arr[:, 3]

    def key(self, g: Mat2) -> int:
        q = self.q
        return ((g.a * q + g.b) * q + g.c) * q + g.d

    def _invert(self, arr):
        t = self.t
        a, b, c, d = arr.T
        di = t.inv_np[t.sub_np[t.mul_np[a, d], t.mul_np[b, c]]]
        return np.stack(
            [t.mul_np[d, di], t.mul_np[t.neg_np[b], di], t.mul_np[t.neg_np[c], di], t.mul_np[a, di]], axis=1
        )

    def _mul_arrays(self, x, y):
        """Row-wise product of two (N, 4) arrays (either may broadcast)."""
        M, A = self.t.mul_np, self.t.add_np
        return np.stack(
            [
                A[M[x[:, 0], y[:, 0]], M[x[:, 1], y[:, 2]]],
                A[M[x[:, 0], y[:, 1]], M[x[:, 1], y[:, 3]]],
                A[M[x[:, 2], y[:, 0]], M[x[:, 3], y[:, 2]]],
                A[M[x[:, 2], y[:, 1]], M[x[:, 3], y[:, 3]]],
            ],
            axis=1,
        )

    def conjugates_of(self, g: Mat2) -> np.ndarray:
        """Keys of x g x^-1 for every x, in canonical order of x."""
        ga = np.array([g], dtype=np.int64)
        return self.encode(self._mul_arrays(self._mul_arrays(self.array, ga), self.inv_array))

    def commutes_with(self, g: Mat2) -> np.ndarray:
        ga = np.array([g], dtype=np.int64)
        left = self.encode(self._mul_arrays(self.array, ga))
        right = self.encode(self._mul_arrays(ga, self.array))
        return left == right

    # -- scalar operations ----------------------------------------------------
    def mul(self, g: Mat2, h: Mat2) -> Mat2:
        A, M = self.t.add, self.t.mul
        return Mat2(
            A[M[g.a][h.a]][M[g.b][h.c]],
            A[M[g.a][h.b]][M[g.b][h.d]],
            A[M[g.c][h.a]][M[g.d][h.c]],
            A[M[g.c][h.b]][M[g.d][h.d]],
        )

    def det(self, g: Mat2) -> int:
        return self.t.sub[self.t.mul[g.a][g.d]][self.t.mul[g.b][g.c]]

    def inv(self, g: Mat2) -> Mat2:
        t = self.t
        di = t.inv[self.det(g)]
        return Mat2(t.mul[g.d][di], t.mul[t.neg[g.b]][di], t.mul[t.neg[g.c]][di], t.mul[g.a][di])

    def conj(self, x: Mat2, g: Mat2) -> Mat2:
        return self.mul(self.mul(x, g), self.inv(x))

    def power(self, g: Mat2, n: int) -> Mat2:
        if n < 0:
            g, n = self.inv(g), -n
        r, base = self.identity, g
        while n:
            if n & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            n >>= 1
        return r

    def order_of(self, g: Mat2) -> int:
        k, h = 1, g
        while h != self.identity:
            h = self.mul(h, g)
            k += 1
        return k

    def neg(self, g: Mat2) -> Mat2:
        n = self.t.neg
        return Mat2(n[g.a], n[g.b], n[g.c], n[g.d])

    def contains(self, g: Mat2) -> bool:
        return self.lookup[self.key(g)] >= 0

    def mat(self, a, b, c, d) -> Mat2:
        """Matrix from field elements (or integers in the prime field)."""
        f = self.field
        return Mat2(*(f.elem(x).label for x in (a, b, c, d)))

    def entries(self, g: Mat2) -> tuple[FqElem, ...]:
        return tuple(self.field.from_label(x) for x in g)

    def format(self, g: Mat2) -> list[list[str]]:
        a, b, c, d = (str(x) for x in self.entries(g))
        return [[a, b], [c, d]]


@lru_cache(maxsize=16)
def group_for(spec: GroupSpec) -> MatrixGroup:
    return MatrixGroup(spec)


def enumerate_group(spec: GroupSpec) -> list[Mat2]:
    return list(group_for(spec).elements)


def centralizer(g: Mat2, spec: GroupSpec) -> list[Mat2]:
    G = group_for(spec)
    return [G.elements[i] for i in np.flatnonzero(G.commutes_with(g))]


def find_conjugator(g: Mat2, h: Mat2, spec: GroupSpec) -> Mat2 | None:
    """First w (canonical order) with w g w^-1 = h, or None."""
    G = group_for(spec)
    hits = np.flatnonzero(G.conjugates_of(g) == G.key(h))
    return G.elements[int(hits[0])] if len(hits) else None


def outer_switch(g: Mat2, x, spec: GroupSpec) -> Mat2:
    """diag(x, 1) g diag(x, 1)^-1."""
    G = group_for(spec)
    x = G.field.elem(x)
    if x.is_zero:
        raise ValueError("x must be nonzero")
    a, b, c, d = G.entries(g)
    return G.mat(a, x * b, c / x, d)


def solve_binary_quadratic(trace: FqElem, target: FqElem) -> tuple[FqElem, FqElem]:
    """First (a, c) in canonical order with a^2 + a c trace + c^2 = target."""
    F = trace.field
    if F.p == 2:
        raise ValueError("q must be odd")
    if (trace * trace - 4).is_zero:
        raise ValueError("the form u^2 + uv*trace + v^2 is degenerate")
    for a in F.elements:
        for c in F.elements:
            if a * a + a * c * trace + c * c == target:
                return a, c
    raise ValueError(f"{target} is not represented by the form")


# -- the class tables ---------------------------------------------------------

def _tag_formulas(spec: GroupSpec) -> dict[str, dict]:
    q, p, n = spec.q, spec.field.p, spec.field.n
    if spec.kind == GL2:
        return {
            "C1": dict(size=1, number=q - 1, centralizer=None),
            "C2": dict(size=q * q - 1, number=q - 1, centralizer=invariant_factors([q - 1] + [p] * n)),
            "C3": dict(size=q * (q + 1), number=(q - 1) * (q - 2) // 2, centralizer=invariant_factors([q - 1, q - 1])),
            "C4": dict(size=(q - 1) * q, number=q * (q - 1) // 2, centralizer=invariant_factors([q * q - 1])),
        }
    if p == 2:
        return {
            "C1": dict(size=1, number=1, centralizer=None),
            "C2": dict(size=q * q - 1, number=1, centralizer=invariant_factors([p] * n)),
            "C3": dict(size=q * (q + 1), number=(q - 2) // 2, centralizer=invariant_factors([q - 1])),
            "C4": dict(size=(q - 1) * q, number=q // 2, centralizer=invariant_factors([q + 1])),
        }
    unip = invariant_factors([2] + [p] * n)
    return {
        "C1": dict(size=1, number=1, centralizer=None),
        "C2": dict(size=1, number=1, centralizer=None),
        "C3": dict(size=(q * q - 1) // 2, number=1, centralizer=unip),
        "C4": dict(size=(q * q - 1) // 2, number=1, centralizer=unip),
        "C5": dict(size=(q * q - 1) // 2, number=1, centralizer=unip),
        "C6": dict(size=(q * q - 1) // 2, number=1, centralizer=unip),
        "C7": dict(size=q * (q + 1), number=(q - 3) // 2, centralizer=invariant_factors([q - 1])),
        "C8": dict(size=(q - 1) * q, number=(q - 1) // 2, centralizer=invariant_factors([q + 1])),
    }


def table_formulas(spec: GroupSpec) -> dict[str, dict]:
    """Size, number of classes and centralizer invariant factors per row."""
    return _tag_formulas(spec)


def _extension(spec: GroupSpec) -> QuadraticExtension:
    return QuadraticExtension.of(spec.field)


def table_parameters(tag: str, spec: GroupSpec) -> list[tuple]:
    """Every valid parameter tuple for a table row, canonical order."""
    F = spec.field
    units = [x for x in F.elements if not x.is_zero]
    one, m1 = F.one, -F.one
    nonsq = [x for x in units if not x.is_square()]
    E = _extension(spec)
    outside = [z for z in E.elements if not z.in_base]
    if spec.kind == GL2:
        rows = {
            "C1": [(x,) for x in units],
            "C2": [(x,) for x in units],
            "C3": [(x, y) for x in units for y in units if x != y],
            "C4": [(z,) for z in outside],
        }
    elif F.p == 2:
        rows = {
            "C1": [()],
            "C2": [()],
            "C3": [(x,) for x in units if x != one],
            "C4": [(z,) for z in outside if z.norm() == one],
        }
    else:
        rows = {
            "C1": [()],
            "C2": [()],
            "C3": [()],
            "C4": [(x,) for x in nonsq],
            "C5": [()],
            "C6": [(x,) for x in nonsq],
            "C7": [(x,) for x in units if x not in (one, m1)],
            "C8": [(z,) for z in outside if z.norm() == one],
        }
    return rows[tag]


def table_representative(tag: str, params: tuple, spec: GroupSpec) -> Mat2:
    """The literal representative matrix of a table row."""
    G = group_for(spec)
    F = spec.field
    one = F.one

    def need_nonsquare(x):
        if x.is_zero or x.is_square():
            raise ValueError(f"{tag} needs a non-square parameter, got {x}")

    def need_outside(z):
        if not isinstance(z, ExtElem) or z.in_base:
            raise ValueError(f"{tag} needs x in E outside F_q")
        if spec.kind == SL2 and z.norm() != one:
            raise ValueError(f"{tag} in SL2 needs x with x*conj(x) = 1")

    if spec.kind == GL2:
        if tag == "C1":
            (x,) = params
            return G.mat(x, 0, 0, x)
        if tag == "C2":
            (x,) = params
            return G.mat(x, 1, 0, x)
        if tag == "C3":
            x, y = params
            if x == y or x.is_zero or y.is_zero:
                raise ValueError("C3 needs distinct nonzero x, y")
            return G.mat(x, 0, 0, y)
        if tag == "C4":
            (z,) = params
            need_outside(z)
            return G.mat(0, -z.norm(), 1, z.trace())
    elif F.p == 2:
        if tag == "C1":
            return G.identity
        if tag == "C2":
            return G.mat(1, 1, 0, 1)
        if tag == "C3":
            (x,) = params
            if x.is_zero or x == one:
                raise ValueError("C3 needs x != 0, 1")
            return G.mat(x, 0, 0, x.inverse())
        if tag == "C4":
            (z,) = params
            need_outside(z)
            return G.mat(0, 1, 1, z.trace())
    else:
        if tag == "C1":
            return G.identity
        if tag == "C2":
            return G.mat(-1, 0, 0, -1)
        if tag == "C3":
            return G.mat(1, 1, 0, 1)
        if tag == "C4":
            (x,) = params
            need_nonsquare(x)
            return G.mat(1, x, 0, 1)
        if tag == "C5":
            return G.mat(-1, 1, 0, -1)
        if tag == "C6":
            (x,) = params
            need_nonsquare(x)
            return G.mat(-1, x, 0, -1)
        if tag == "C7":
            (x,) = params
            if x.is_zero or x in (one, -one):
                raise ValueError("C7 needs x != 0, 1, -1")
            return G.mat(x, 0, 0, x.inverse())
        if tag == "C8":
            (z,) = params
            need_outside(z)
            return G.mat(0, -1, 1, z.trace())
    raise ValueError(f"unknown row {tag} for {spec.name}")


def _param_key(params: tuple) -> tuple:
    return tuple(x.label for x in params)


@dataclass(eq=False)
class ConjClass:
    group: MatrixGroup = field(repr=False)
    tag: str
    params: tuple
    representative: Mat2
    elements: list[Mat2] = field(repr=False)
    coset_reps: list[Mat2] = field(repr=False)
    centralizer: list[Mat2] = field(repr=False)

    def __post_init__(self):
        self.index = {g: i for i, g in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_central(self) -> bool:
        return self.size == 1

    @property
    def label(self) -> str:
        if not self.params:
            return self.tag
        return f"{self.tag}({', '.join(str(x) for x in self.params)})"

    @cached_property
    def centralizer_struct(self) -> AbelianStruct:
        if self.is_central:
            raise ValueError("centralizer of a central element is the whole group")
        G = self.group
        return abelian_structure(self.centralizer, G.mul, G.identity)

    def centralizer_description(self) -> str:
        if self.is_central:
            return self.group.spec.kind
        f = self.centralizer_struct.factors
        return " x ".join(f"Z{d}" for d in f) if f else "trivial"


def _brute_force_partition(G: MatrixGroup) -> np.ndarray:
    class_id = np.full(len(G.elements), -1, dtype=np.int64)
    nxt = 0
    for i in range(len(G.elements)):
        if class_id[i] >= 0:
            continue
        orbit = G.lookup[np.unique(G.conjugates_of(G.elements[i]))]
        class_id[orbit] = nxt
        nxt += 1
    return class_id


@lru_cache(maxsize=16)
def conjugacy_classes(spec: GroupSpec) -> tuple[ConjClass, ...]:
    """Brute-force classes, each tagged with its table row and parameters."""
    G = group_for(spec)
    class_id = _brute_force_partition(G)
    n_classes = int(class_id.max()) + 1
    formulas = _tag_formulas(spec)

    hits: dict[int, list[tuple[str, tuple]]] = {}
    for tag in formulas:
        for params in table_parameters(tag, spec):
            rep = table_representative(tag, params, spec)
            cid = int(class_id[G.lookup[G.key(rep)]])
            hits.setdefault(cid, []).append((tag, params))

    classes = []
    for cid in range(n_classes):
        rows = hits.get(cid)
        if not rows:
            raise AssertionError(f"class {cid} of {spec.name} matches no table row")
        tags = {t for t, _ in rows}
        if len(tags) != 1:
            raise AssertionError(f"class {cid} of {spec.name} matches rows {sorted(tags)}")
        tag, params = min(rows, key=lambda r: _param_key(r[1]))
        classes.append(_make_class(G, tag, params))

    classes.sort(key=lambda C: (int(C.tag[1:]), _param_key(C.params)))
    return tuple(classes)


def _make_class(G: MatrixGroup, tag: str, params: tuple) -> ConjClass:
    rep = table_representative(tag, params, G.spec)
    keys = G.conjugates_of(rep)
    uniq, first = np.unique(keys, return_index=True)
    elems = [G.elements[int(G.lookup[k])] for k in uniq]
    reps = [G.elements[int(i)] for i in first]
    order = sorted(range(len(elems)), key=lambda i: elems[i])
    cent = [G.elements[i] for i in np.flatnonzero(keys == G.key(rep))]
    return ConjClass(
        group=G,
        tag=tag,
        params=params,
        representative=rep,
        elements=[elems[i] for i in order],
        coset_reps=[reps[i] for i in order],
        centralizer=cent,
    )


def classes_by_tag(spec: GroupSpec, tag: str) -> list[ConjClass]:
    return [C for C in conjugacy_classes(spec) if C.tag == tag]


def find_class(spec: GroupSpec, g: Mat2) -> ConjClass:
    for C in conjugacy_classes(spec):
        if g in C.index:
            return C
    raise ValueError("element not in the group")
