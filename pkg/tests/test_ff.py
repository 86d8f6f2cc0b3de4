from itertools import product

import pytest
from hypothesis import given, strategies as st

from ydscreen.ff import (
    BoundError, FieldMismatchError, FieldSpec, QuadraticExtension, arith, default_modulus,
    element_order, enumerate_field, galois_conjugate, is_irreducible, minimal_polynomial, norm, trace,
)

FIELDS = [FieldSpec.of_order(q) for q in (2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27)]
F25 = FieldSpec(5, 2, (3, 0, 1))      # s^2 = 2


def _brute_least_irreducible(p, n):
    def has_factor(poly):
        # reducible iff some monic polynomial of degree 1..n//2 divides it
        for d in range(1, n // 2 + 1):
            for tail in product(range(p), repeat=d):
                div = tail + (1,)
                r = list(poly)
                for k in range(len(r) - 1, d - 1, -1):
                    c = r[k]
                    if c:
                        for i, dc in enumerate(div):
                            r[k - d + i] = (r[k - d + i] - c * dc) % p
                if not any(r[:d]):
                    return True
        return False
    for tail in sorted(product(range(p), repeat=n)):
        poly = tuple(tail) + (1,)
        if not has_factor(poly):
            return poly


class TestModulus:
    def test_prime_field_is_x(self):
        assert default_modulus(2, 1) == (0, 1)

    def test_f4(self):
        assert default_modulus(2, 2) == (1, 1, 1)

    @pytest.mark.parametrize("p,n", [(5, 2), (3, 2), (3, 3), (2, 3), (2, 4), (7, 2)])
    def test_matches_brute_force_scan(self, p, n):
        assert default_modulus(p, n) == _brute_least_irreducible(p, n)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ValueError):
            FieldSpec(5, 2, (1, 0, 1))   # x^2 + 1 = (x-2)(x-3)

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            FieldSpec(5, 2, (2, 0, 2))

    def test_non_prime_rejected(self):
        with pytest.raises(ValueError):
            FieldSpec(6)

    def test_irreducibility(self):
        assert is_irreducible((3, 0, 1), 5)
        assert not is_irreducible((4, 0, 1), 5)


class TestArithmetic:
    def test_f4_s_plus_inverse(self):
        F = FieldSpec(2, 2)
        s = F.gen
        assert s + s.inverse() == F.one
        assert element_order(s) == 3

    def test_f25_paper_values(self):
        s = F25.gen
        a = F25.one + s
        assert a * a == F25.elem((3, 2))
        assert (a * a).inverse() == F25.elem((3, 3))
        assert -(a * a + (a * a).inverse()) == F25.elem(4)
        assert element_order(a) == 12
        assert element_order(F25.one + 2 * s) == 24

    def test_arith_kinds(self):
        F = FieldSpec(7)
        a, b = F.elem(3), F.elem(5)
        assert arith(a, b, "add") == F.elem(1)
        assert arith(a, b, "sub") == F.elem(5)
        assert arith(a, b, "mul") == F.elem(1)
        assert arith(a, b, "div") == F.elem(2)

    def test_division_by_zero(self):
        F = FieldSpec(7)
        with pytest.raises(ZeroDivisionError):
            F.one / F.zero

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            FieldSpec(5).one + FieldSpec(7).one

    def test_order_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            element_order(FieldSpec(5).zero)


class TestEnumeration:
    def test_f2(self):
        assert [str(x) for x in enumerate_field(FieldSpec(2))] == ["0", "1"]

    def test_f4_units_cyclic(self):
        units = [x for x in enumerate_field(FieldSpec(2, 2)) if not x.is_zero]
        assert len(units) == 3 and any(x.order() == 3 for x in units)

    def test_f9_squares(self):
        units = [x for x in enumerate_field(FieldSpec(3, 2)) if not x.is_zero]
        assert len({x * x for x in units}) == 4

    def test_canonical_order(self):
        els = enumerate_field(FieldSpec(3, 2))
        assert [e.coeffs for e in els] == sorted(e.coeffs for e in els)

    def test_bound(self):
        with pytest.raises(BoundError):
            enumerate_field(FieldSpec(2, 3), bound=7)


class TestExtension:
    def test_f25_conjugate_trace_norm(self):
        E = QuadraticExtension.of(FieldSpec(5), m0=-2, m1=0)     # t^2 = 2
        x = E(1, 1)
        assert galois_conjugate(x) == E(1, -1)
        assert trace(x) == FieldSpec(5).elem(2)
        assert norm(x) == FieldSpec(5).elem(-1)

    def test_quadratic_modulus_with_root_rejected(self):
        with pytest.raises(ValueError):
            QuadraticExtension.of(FieldSpec(5), m0=-1, m1=0)     # t^2 = 1

    @pytest.mark.parametrize("F", FIELDS[:8], ids=str)
    def test_fixed_points_are_base(self, F):
        E = QuadraticExtension.of(F)
        fixed = [x for x in E.elements if x.conjugate() == x]
        assert len(fixed) == F.q and all(x.in_base for x in fixed)

    def test_frobenius(self):
        E = QuadraticExtension.of(FieldSpec(7))
        for x in E.elements[:20]:
            assert x.conjugate() == x ** 7


class TestMinimalPolynomial:
    def test_base_element(self):
        F = FieldSpec(7)
        assert minimal_polynomial(F.elem(3), F) == (F.elem(-3), F.one)

    def test_f4_generator(self):
        s = FieldSpec(2, 2).gen
        assert [c.label for c in minimal_polynomial(s, FieldSpec(2))] == [1, 1, 1]

    @pytest.mark.parametrize("r", [3, 5])
    def test_prime_degree_subfield_free(self, r):
        F = FieldSpec(3, r)
        base = FieldSpec(3)
        for z in F.elements:
            if not all(c == 0 for c in z.coeffs[1:]):
                m = minimal_polynomial(z, base)
                assert len(m) - 1 == r
                break

    def test_extension_element_over_base(self):
        F = FieldSpec(5)
        E = QuadraticExtension.of(F)
        x = E(1, 1)
        m = minimal_polynomial(x, F)
        assert len(m) == 3
        c0, c1, _ = m
        assert c1 == -x.trace() and c0 == x.norm()


fields = st.sampled_from(FIELDS)


@st.composite
def triples(draw):
    F = draw(fields)
    pick = st.integers(0, F.q - 1).map(F.from_label)
    return F, draw(pick), draw(pick), draw(pick)


@given(triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert F.one * a == a and a + F.zero == a
    assert a - a == F.zero
    if not a.is_zero:
        assert a * a.inverse() == F.one
        assert (F.q - 1) % a.order() == 0


@given(fields, st.data())
def test_extension_axioms(F, data):
    E = QuadraticExtension.of(F)
    x = E.elements[data.draw(st.integers(0, E.q - 1))]
    y = E.elements[data.draw(st.integers(0, E.q - 1))]
    assert x.conjugate().conjugate() == x
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + x.conjugate()).in_base and (x * x.conjugate()).in_base
    assert x.norm() * y.norm() == (x * y).norm()
    if not x.is_zero:
        assert (E.q - 1) % x.order() == 0
