"""Conjugation racks and rack isomorphism.

A rack is stored as its operation table t[i][j] = i |> j on 0..N-1.  For a
conjugacy class, i |> j is the index of g_i g_j g_i^-1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations

from .grp2 import SL2, ConjClass


@dataclass(frozen=True)
class Rack:
    table: tuple[tuple[int, ...], ...]
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def check_axioms(self) -> bool:
        N, t = self.size, self.table
        for row in t:
            if sorted(row) != list(range(N)):
                return False
        return all(
            t[i][t[j][k]] == t[t[i][j]][t[i][k]] for i in range(N) for j in range(N) for k in range(N)
        )

    def element_invariant(self, i: int) -> tuple:
        """Cycle type of j -> i |> j, and how many j fix i."""
        row = self.table[i]
        seen, cycles = set(), []
        for s in range(self.size):
            if s in seen:
                continue
            n, x = 0, s
            while x not in seen:
                seen.add(x)
                x = row[x]
                n += 1
            cycles.append(n)
        fixers = sum(1 for j in range(self.size) if self.table[j][i] == i)
        return (tuple(sorted(cycles)), fixers)

    @cached_property
    def invariants(self) -> tuple:
        return tuple(self.element_invariant(i) for i in range(self.size))

    def profile(self) -> dict:
        counts = Counter(self.invariants)
        return {
            "size": self.size,
            "elements": [
                {"cycle_type": list(ct), "fixers": fx, "count": n} for (ct, fx), n in sorted(counts.items())
            ],
        }


def rack_from_class(C: ConjClass) -> Rack:
    G = C.group
    els = C.elements
    inv = [G.inv(g) for g in els]
    table = tuple(tuple(C.index[G.mul(G.mul(a, b), ai)] for b in els) for a, ai in zip(els, inv))
    return Rack(table, C.label)


# -- named racks from alternating groups ----------------------------------------

def _compose(a, b):
    """(a b)(k) = a(b(k))."""
    return tuple(a[k] for k in b)


def _inverse(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def _is_even(a) -> bool:
    seen, parity = set(), 0
    for s in range(len(a)):
        n, x = 0, s
        while x not in seen:
            seen.add(x)
            x = a[x]
            n += 1
        if n:
            parity += n - 1
    return parity % 2 == 0


def _alternating(n: int):
    return [a for a in permutations(range(n)) if _is_even(a)]


def _cycle(n: int, points) -> tuple:
    a = list(range(n))
    for u, v in zip(points, points[1:] + points[:1]):
        a[u] = v
    return tuple(a)


def _class_rack(group, g, name) -> Rack:
    cls = sorted({_compose(_compose(s, g), _inverse(s)) for s in group})
    index = {x: i for i, x in enumerate(cls)}
    table = tuple(tuple(index[_compose(_compose(a, b), _inverse(a))] for b in cls) for a in cls)
    return Rack(table, name)


NAMED_RACKS = ("tetrahedron_vertices", "dodecahedron_faces", "icosahedron_faces")


@lru_cache(maxsize=None)
def named_rack(name: str) -> Rack:
    if name == "tetrahedron_vertices":
        return _class_rack(_alternating(4), _cycle(4, [0, 1, 2]), name)
    if name == "dodecahedron_faces":
        return _class_rack(_alternating(5), _cycle(5, [0, 1, 2, 3, 4]), name)
    if name == "icosahedron_faces":
        return _class_rack(_alternating(5), _cycle(5, [0, 1, 2]), name)
    raise ValueError(f"unknown rack {name!r}; choose from {', '.join(NAMED_RACKS)}")


# -- isomorphism ------------------------------------------------------------------

def rack_iso(r1: Rack, r2: Rack) -> dict[int, int] | None:
    """First isomorphism r1 -> r2 found by backtracking, or None.

    Candidates are restricted to elements with the same invariant; each choice
    is closed under f(i |> j) = f(i) |> f(j) before the next one is made.
    """
    if r1.size != r2.size or sorted(r1.invariants) != sorted(r2.invariants):
        return None
    N = r1.size
    t1, t2 = r1.table, r2.table
    inv1, inv2 = r1.invariants, r2.invariants

    def close(f: dict, g: dict, new: list) -> bool:
        queue = list(new)
        while queue:
            a = queue.pop()
            for b in list(f):
                for x, y in ((a, b), (b, a)):
                    src, dst = t1[x][y], t2[f[x]][f[y]]
                    if src in f:
                        if f[src] != dst:
                            return False
                    else:
                        if dst in g or inv1[src] != inv2[dst]:
                            return False
                        f[src], g[dst] = dst, src
                        queue.append(src)
        return True

    def search(f: dict, g: dict):
        if len(f) == N:
            return f
        a = min(i for i in range(N) if i not in f)
        for b in range(N):
            if b in g or inv1[a] != inv2[b]:
                continue
            f2, g2 = dict(f), dict(g)
            f2[a], g2[b] = b, a
            if close(f2, g2, [a]):
                found = search(f2, g2)
                if found:
                    return found
        return None

    f = search({}, {})
    if f is None:
        return None
    return {i: f[i] for i in range(N)}


def is_rack_hom(r1: Rack, r2: Rack, f: dict[int, int]) -> bool:
    return all(f[r1.op(i, j)] == r2.op(f[i], f[j]) for i in range(r1.size) for j in range(r1.size))


@dataclass(frozen=True)
class ProjectionVerdict:
    tags: tuple[str, str]
    isomorphic: bool
    injective: bool        # both classes meet -C trivially
    same_psl_class: bool   # C_j = -C_i

    def to_json(self) -> dict:
        return {"classes": list(self.tags), "isomorphic": self.isomorphic,
                "injective": self.injective, "same_psl_class": self.same_psl_class}


def psl_projection_iso(Ci: ConjClass, Cj: ConjClass) -> ProjectionVerdict:
    """Compare two unipotent-type classes of SL2(F_q), q odd, through PSL2."""
    G = Ci.group
    if G.spec.kind != SL2 or G.spec.field.p == 2 or Cj.group is not G:
        raise ValueError("needs two classes of the same SL2(F_q) with q odd")
    neg_i = {G.neg(g) for g in Ci.elements}
    neg_j = {G.neg(g) for g in Cj.elements}
    injective = not (neg_i & set(Ci.elements)) and not (neg_j & set(Cj.elements))
    same = neg_i == set(Cj.elements)
    iso = rack_iso(rack_from_class(Ci), rack_from_class(Cj)) is not None
    return ProjectionVerdict((Ci.tag, Cj.tag), iso, injective, same)
