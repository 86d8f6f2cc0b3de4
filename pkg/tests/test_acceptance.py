"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

All comparisons are exact; the only numeric thresholds are the runtime limits.
"""
import random
import time
from itertools import combinations

import pytest

from ydscreen import grp2
from ydscreen.braid import CommutingSubset, braiding_matrix, commuting_cliques
from ydscreen.chars import MINUS_ONE, enumerate_characters, roots_of_unity
from ydscreen.classify import (
    FLAG_CITATION, FLAG_SOUNDNESS, FLAG_TETRAHEDRON, CentralCharTable, generation_check_A,
    screen_group,
)
from ydscreen.cli import run
from ydscreen.criteria import inverse_rule, potinv_power, rank2_rows, rank2_symmetric, screen_braiding
from ydscreen.ff import FieldSpec
from ydscreen.grp2 import GL2, SL2, GroupSpec, conjugacy_classes, group_for, table_formulas
from ydscreen.numth import lematec_sweep, snl_sweep
from ydscreen.racks import named_rack, psl_projection_iso, rack_from_class, rack_iso


def spec(kind, q):
    return GroupSpec(kind, FieldSpec.of_order(q))


def cold():
    grp2.conjugacy_classes.cache_clear()
    grp2.group_for.cache_clear()


def verdict(capsys, label, problems, elapsed=None, limit=None):
    ok = not problems and (limit is None or elapsed < limit)
    timing = f" ({elapsed:.1f}s / limit {limit}s)" if limit is not None else ""
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'}  {label}{timing}")
        for p in problems[:10]:
            print(f"      {p}")
    assert not problems, problems
    if limit is not None:
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"


def _sgn_eps(C):
    G = C.group
    minus_I = G.mat(-1, 0, 0, -1)
    unipotent = [u for u in C.centralizer if u[0] == G.spec.field.one.label]
    return {chi.exponents for chi in enumerate_characters(C.centralizer_struct)
            if chi(minus_I).is_minus_one and all(chi(u).is_one for u in unipotent)}


# 1 ---------------------------------------------------------------------------

def test_criterion_1_table_fidelity(capsys):
    cold()
    problems = []
    t0 = time.perf_counter()
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        for kind in (SL2, GL2):
            s = spec(kind, q)
            classes = conjugacy_classes(s)
            want = q * q - 1 if kind == GL2 else (q + 1 if q % 2 == 0 else q + 4)
            if len(classes) != want:
                problems.append(f"{s.name}: {len(classes)} classes, expected {want}")
            if sum(C.size for C in classes) != s.order:
                problems.append(f"{s.name}: class sizes do not sum to the group order")
            formulas = table_formulas(s)
            for tag, f in formulas.items():
                n = sum(1 for C in classes if C.tag == tag)
                if n != f["number"]:
                    problems.append(f"{s.name} {tag}: {n} classes, expected {f['number']}")
            G = group_for(s)
            for C in classes:
                f = formulas[C.tag]
                Z = [x for x in G.elements if G.mul(x, C.representative) == G.mul(C.representative, x)]
                if C.size != f["size"] or len(Z) * C.size != s.order or len(Z) != len(C.centralizer):
                    problems.append(f"{s.name} {C.label}: size {C.size}, |Z| {len(Z)}")
                if f["centralizer"] is not None and C.centralizer_struct.factors != f["centralizer"]:
                    problems.append(f"{s.name} {C.label}: centralizer {C.centralizer_struct.factors}")
    verdict(capsys, "1 group/table fidelity, q in {2,...,13}, SL2 and GL2", problems,
            time.perf_counter() - t0, 60)


# 2 ---------------------------------------------------------------------------

def test_criterion_2_sl2_even(capsys):
    cold()
    problems = []
    t0 = time.perf_counter()
    for q in (4, 8):
        r = screen_group(spec(SL2, q))
        if r.survivors:
            problems.append(f"SL2({q}): {len(r.survivors)} survivors")
        if not r.all_pass:
            problems.append(f"SL2({q}): published-result checks fail")
    r = screen_group(spec(SL2, 2))
    surv = r.survivors
    G = group_for(spec(SL2, 2))
    if len(surv) != 1:
        problems.append(f"SL2(2): {len(surv)} survivors")
    else:
        (v,) = surv
        C = next(cr.cls for cr in r.classes if cr.cls.tag == v.tag)
        is_transposition = C.size == 3 and all(G.order_of(g) == 2 for g in C.elements)
        if not (is_transposition and v.character(C.representative).is_minus_one):
            problems.append(f"SL2(2): survivor {v.to_json()} is not (transposition, sgn)")
    verdict(capsys, "2 SL2 even: no survivors for q = 4, 8; S3 gives only (transposition, sgn)", problems,
            time.perf_counter() - t0, 30)


# 3 ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_criterion_3_sl2_odd(capsys, q):
    cold()
    problems = []
    t0 = time.perf_counter()
    r = screen_group(spec(SL2, q))
    elapsed = time.perf_counter() - t0
    G = group_for(r.spec)
    got = {cr.cls.label: cr.survivor_keys() for cr in r.classes}
    want = {}
    for cr in r.classes:
        C = cr.cls
        A = C.centralizer_struct if not C.is_central else None
        if C.tag in ("C1", "C3", "C4"):
            want[C.label] = set()
        elif C.tag == "C2":
            want[C.label] = {(str(MINUS_ONE),)}
        elif C.tag in ("C5", "C6"):
            want[C.label] = _sgn_eps(C)
            if len(want[C.label]) != 1:
                problems.append(f"{C.label}: sgn x eps not unique")
        elif C.tag == "C7":
            (x,) = C.params
            g = C.representative
            want[C.label] = set() if x.order() % 2 else {
                chi.exponents for chi in enumerate_characters(A) if chi(g).is_minus_one}
        elif C.tag == "C8":
            g = C.representative
            T = CommutingSubset(C, (C.index[g], C.index[G.inv(g)]))
            want[C.label] = {chi.exponents for chi in enumerate_characters(A)
                             if all(v.is_minus_one for row in braiding_matrix(C, chi, T).values for v in row)}
    for label in got:
        if got[label] != want[label]:
            problems.append(f"{label}: survivors {sorted(got[label])} expected {sorted(want[label])}")
    if not r.all_pass:
        problems += [c.proposition for c in r.paper_checks if c.status == "fail"]
    if any(cr.unresolved for cr in r.classes):
        problems.append("unresolved verdicts present")
    verdict(capsys, f"3 SL2 odd survivor sets, q = {q}", problems, elapsed, 300)


# 4 ---------------------------------------------------------------------------

def test_criterion_4_carve_outs(capsys, tmp_path):
    problems = []
    out = tmp_path / "r.json"
    for q in (3, 9):
        code = run(["classify", "--group", "sl2", "--q", str(q), "--out", str(out)])
        if code != 0:
            problems.append(f"classify sl2 q={q}: exit {code}")
    r3 = screen_group(spec(SL2, 3))
    for cr in r3.classes:
        tag = cr.cls.tag
        if tag in ("C3", "C4", "C5", "C6"):
            if FLAG_TETRAHEDRON not in cr.flags:
                problems.append(f"q=3 {cr.cls.label}: missing {FLAG_TETRAHEDRON}")
            if not cr.survivors or not all(any("tetrahedron" in n for n in v.notes) for v in cr.survivors):
                problems.append(f"q=3 {cr.cls.label}: not reported SURVIVES-with-note")
        elif tag == "C8":
            if cr.flags != [FLAG_CITATION]:
                problems.append(f"q=3 {cr.cls.label}: flags {cr.flags}")
        elif cr.flags:
            problems.append(f"q=3 {cr.cls.label}: unexpected flags {cr.flags}")
    r9 = screen_group(spec(SL2, 9))
    for cr in r9.classes:
        want = [FLAG_SOUNDNESS] if cr.cls.tag in ("C5", "C6") else []
        if cr.flags != want:
            problems.append(f"q=9 {cr.cls.label}: flags {cr.flags}")
    for c in r9.paper_checks:
        if c.proposition.startswith(("C5", "C6")) and "containment" not in c.proposition:
            problems.append(f"q=9: {c.proposition} is not soundness-only")
    verdict(capsys, "4 SL2 carve-outs at q = 3 and q = 9", problems)


# 5 ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_criterion_5_gl2(capsys, q):
    cold()
    problems = []
    t0 = time.perf_counter()
    r = screen_group(spec(GL2, q))
    elapsed = time.perf_counter() - t0
    G = group_for(r.spec)
    F = r.spec.field
    table = CentralCharTable(F)
    for cr in r.classes:
        C = cr.cls
        got = cr.survivor_keys()
        if C.tag == "C1":
            (x,) = C.params
            want = {(rep.family,) + rep.params for rep in table.reps if table.value(rep, x).is_minus_one}
        elif C.tag == "C2":
            (x,) = C.params
            if F.p == 2:
                want = set()
            else:
                mats = [(G.mat(x ** i, a, 0, x ** i), i) for i in range(2 * x.order()) for a in F.elements]
                want = {chi.exponents for chi in enumerate_characters(C.centralizer_struct)
                        if all(chi(h) == MINUS_ONE ** i for h, i in mats)}
        elif C.tag == "C4":
            g = C.representative
            T = next(T for T in commuting_cliques(C) if C.index[g] in T.indices and len(T) == 2)
            want = set()
            for chi in enumerate_characters(C.centralizer_struct):
                vals = {v for row in braiding_matrix(C, chi, T).values for v in row}
                if len(vals) == 1 and (vals.pop().order in (2, 3)):
                    want.add(chi.exponents)
        else:
            continue        # C3 relies on compare_to_paper's four-condition check
        if got != want:
            problems.append(f"{C.label}: got {sorted(got)} expected {sorted(want)}")
    if table.counts() and sum(table.counts().values()) != q * q - 1:
        problems.append("Table-4 family counts do not sum to q^2 - 1")
    problems += [c.proposition for c in r.paper_checks if c.status == "fail"]
    # central scalars that no stated rule decides stay UNRESOLVED by design
    if any(cr.unresolved for cr in r.classes if not cr.cls.is_central):
        problems.append("unresolved verdicts in non-central classes")
    verdict(capsys, f"5 GL2 survivor sets, q = {q}", problems, elapsed, 300)


# 6 ---------------------------------------------------------------------------

def test_criterion_6_racks(capsys):
    problems = []
    t0 = time.perf_counter()
    s5 = spec(SL2, 5)
    by = {}
    for C in conjugacy_classes(s5):
        by.setdefault(C.tag, []).append(C)
    dodeca, ico, tetra = (named_rack(n) for n in ("dodecahedron_faces", "icosahedron_faces", "tetrahedron_vertices"))
    for tag in ("C3", "C4", "C5", "C6"):
        R = rack_from_class(by[tag][0])
        if R.size != 12 or rack_iso(R, dodeca) is None:
            problems.append(f"q=5 {tag}: not the dodecahedron rack")
    c8_matches = [C.label for C in by["C8"] if rack_iso(rack_from_class(C), ico) is not None]
    if not c8_matches:
        problems.append("q=5: no C8 class is the icosahedron rack")
    C3_q3 = next(C for C in conjugacy_classes(spec(SL2, 3)) if C.tag == "C3")
    R = rack_from_class(C3_q3)
    if R.size != 4 or rack_iso(R, tetra) is None:
        problems.append("q=3 C3: not the tetrahedron rack")
    for q, partner, other in ((5, "C5", "C6"), (7, "C6", "C5")):
        cls = {C.tag: C for C in conjugacy_classes(spec(SL2, q)) if C.tag in ("C3", "C4", "C5", "C6")}
        for a, b in combinations(sorted(cls), 2):
            v = psl_projection_iso(cls[a], cls[b])
            if not (v.isomorphic and v.injective):
                problems.append(f"q={q} {a},{b}: {v.to_json()}")
        if not psl_projection_iso(cls["C3"], cls[partner]).same_psl_class:
            problems.append(f"q={q}: C3 and {partner} should share a PSL class")
        if psl_projection_iso(cls["C3"], cls[other]).same_psl_class:
            problems.append(f"q={q}: C3 and {other} should not share a PSL class")
    verdict(capsys, "6 rack identifications (dodecahedron, tetrahedron, some C8 icosahedral, PSL projection)",
            problems, time.perf_counter() - t0, 10)


def test_criterion_6_exactly_one_icosahedral_c8(capsys):
    """The literal 'exactly one C8-type class' reading.

    Both C8 classes of SL2(F_5) are icosahedral: g -> -g maps one class onto
    the other and commutes with conjugation, so the two racks are always
    isomorphic.  The criterion as worded cannot hold; it is left failing.
    """
    ico = named_rack("icosahedron_faces")
    classes = [C for C in conjugacy_classes(spec(SL2, 5)) if C.tag == "C8"]
    matches = [C.label for C in classes if rack_iso(rack_from_class(C), ico) is not None]
    problems = [] if len(matches) == 1 else [
        f"{len(matches)} C8 classes are icosahedral: {', '.join(matches)} "
        "(g -> -g is a rack isomorphism between them)"]
    verdict(capsys, "6 exactly one C8 class at q = 5 is the icosahedron rack", problems)


# 7 ---------------------------------------------------------------------------

def test_criterion_7_engine_properties(capsys):
    problems = []
    roots = roots_of_unity(24)
    r12 = [a for a in roots if a.in_R(12)]
    # rank-two table, literal rows quantified over alpha
    for zeta in roots:
        for mu in [None] + roots:
            lit = set()
            if mu is None or mu.is_one:
                lit.add(1)
            else:
                if not zeta.is_one and (zeta * mu).is_one:
                    lit.add(2)
                if zeta.is_minus_one and not mu.is_minus_one:
                    lit.add(3)
                if any(zeta == -(a ** -2) and mu == -(a ** 3) for a in r12):
                    lit.add(4)
                if any(zeta == -(a ** -2) and mu == a for a in r12):
                    lit.add(5)
            rows = rank2_rows(zeta, mu)
            if set(rows) != lit or len(rows) > 1:
                problems.append(f"rank2 rows at ({zeta}, {mu}): {rows} vs {sorted(lit)}")
            if rank2_symmetric(zeta, mu).ruled_out != (zeta.is_one or not lit):
                problems.append(f"rank2 verdict at ({zeta}, {mu})")
    # potinv with g^n = g^-1 agrees with the inverse rule
    for a in roots:
        for m in range(3, 49):
            if m % a.order == 0 and potinv_power(a, m - 1, False, m).ruled_out != inverse_rule(a, m).ruled_out:
                problems.append(f"potinv/inverse disagree at alpha={a}, |g|={m}")
    # coset representative independence, 100 re-selections per class at q = 5
    rng = random.Random(5)
    for kind in (SL2, GL2):
        for C in conjugacy_classes(spec(kind, 5)):
            if C.is_central:
                continue
            G = C.group
            chars = enumerate_characters(C.centralizer_struct)
            cliques = commuting_cliques(C)
            for _ in range(100):
                reps = [G.mul(x, rng.choice(C.centralizer)) for x in C.coset_reps]
                T, chi = rng.choice(cliques), rng.choice(chars)
                if braiding_matrix(C, chi, T, reps) != braiding_matrix(C, chi, T):
                    problems.append(f"{kind}(5) {C.label}: braiding depends on coset representatives")
                    break
    # monotonicity spot checks on real class braidings
    for kind, q in ((SL2, 7), (GL2, 5), (SL2, 8)):
        for C in conjugacy_classes(spec(kind, q)):
            if C.is_central:
                continue
            for T in [T for T in commuting_cliques(C) if len(T) > 2][:3]:
                for chi in enumerate_characters(C.centralizer_struct)[:6]:
                    Q = braiding_matrix(C, chi, T)
                    whole = screen_braiding(Q)
                    for k in range(1, Q.size):
                        pos = sorted(rng.sample(range(Q.size), k))
                        if screen_braiding(Q.principal(pos)).ruled_out and not whole.ruled_out:
                            problems.append(f"monotonicity fails on {C.label}")
    verdict(capsys, "7 criteria engine properties", problems)


# 8 ---------------------------------------------------------------------------

def test_criterion_8_number_theory(capsys):
    problems = []
    t0 = time.perf_counter()
    sweep = lematec_sweep(10 ** 5)
    expected = sum(1 for n in range(3, 10 ** 5 + 1) if n % 3 and n % 4)
    if not sweep.passed or sweep.checked != expected:
        problems.append(f"lematec: {len(sweep.failures)} failures, {sweep.checked} of {expected} checked")
    snl = snl_sweep(31)
    if [c.p for c in snl] != [3, 5, 7, 11, 13, 17, 19, 23, 29, 31] or not all(c.passed for c in snl):
        problems.append("snl: " + ", ".join(f"p={c.p}" for c in snl if not c.passed))
    verdict(capsys, "8 totient lemmas (n <= 10^5, p <= 31)", problems, time.perf_counter() - t0, 30)


# 9 ---------------------------------------------------------------------------

def test_criterion_9_generation(capsys):
    failing = [q for q in (8, 11, 13, 25, 32) if not generation_check_A(q)]
    verdict(capsys, "9 A generates F_q for q in {8, 11, 13, 25, 32}", [f"q={q}" for q in failing])
