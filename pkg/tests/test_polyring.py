"""Polynomial ring, cyclotomic cosets, minimal polynomials, x^n - 1 factors."""

from __future__ import annotations

import random
from math import gcd

import pytest

from asymqec.galois import FieldElement, field_of_size, make_field, nth_root_field, subfield_embedding
from asymqec.polyring import (
    NEG_INF,
    CyclotomicCoset,
    Polynomial,
    cyclotomic_cosets,
    factor_xn_minus_1,
    minimal_polynomial,
    parse_poly,
    poly_gcd,
    render_poly,
)

F2 = make_field(2)
F4 = make_field(2, 2)
F5 = make_field(5)


def P(text, field=F2):
    return parse_poly(text, field)


def test_char2_square():
    assert P("x + 1") * P("x + 1") == P("x^2 + 1")


def test_div_rem_example():
    q, r = P("x^4 + x + 1").div_rem(P("x^2 + x + 1"))
    assert q == P("x^2 + x")
    assert r == P("1")


def test_gcd_with_zero_is_monic_input():
    f = P("x^4 + x + 1")
    assert poly_gcd(f, Polynomial.zero(F2)) == f
    g = Polynomial.from_coeffs(F5, (1, 0, 3))  # 3x^2 + 1, leading 3
    assert poly_gcd(g, Polynomial.zero(F5)).is_monic
    with pytest.raises(ValueError):
        poly_gcd(Polynomial.zero(F2), Polynomial.zero(F2))


def test_division_errors():
    with pytest.raises(ZeroDivisionError):
        P("x").div_rem(Polynomial.zero(F2))
    with pytest.raises(ValueError, match="mixed fields"):
        P("x") + parse_poly("x", F4)


def test_zero_polynomial_degree_sentinel():
    z = Polynomial.zero(F2)
    assert z.degree == NEG_INF
    f = P("x^3 + 1")
    assert (z * f).degree == NEG_INF == z.degree + f.degree
    assert (f * f).degree == f.degree + f.degree


@pytest.mark.parametrize("field,seed", [(F2, 1), (F4, 2), (F5, 3)])
def test_div_rem_round_trip_random(field, seed):
    rng = random.Random(seed)
    for _ in range(10_000):
        a = Polynomial.from_coeffs(field, [rng.randrange(field.q) for _ in range(rng.randrange(9))])
        b = Polynomial.from_coeffs(field, [rng.randrange(field.q) for _ in range(rng.randrange(1, 6))])
        if b.is_zero:
            continue
        q, r = a.div_rem(b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_gcd_divides_both():
    rng = random.Random(4)
    for _ in range(300):
        a = Polynomial.from_coeffs(F4, [rng.randrange(4) for _ in range(rng.randrange(1, 7))])
        b = Polynomial.from_coeffs(F4, [rng.randrange(4) for _ in range(rng.randrange(1, 7))])
        if a.is_zero and b.is_zero:
            continue
        g = poly_gcd(a, b)
        assert g.is_monic
        assert a.is_zero or g.divides(a)
        assert b.is_zero or g.divides(b)


def test_cosets_examples():
    assert [c.members for c in cyclotomic_cosets(7, 2)] == [(0,), (1, 2, 4), (3, 5, 6)]
    assert [c.members for c in cyclotomic_cosets(15, 2)] == [
        (0,), (1, 2, 4, 8), (3, 6, 9, 12), (5, 10), (7, 11, 13, 14)]
    # q = 1 mod n fixes every residue
    assert all(len(c.members) == 1 for c in cyclotomic_cosets(5, 16))


def test_cosets_reject_repeated_roots():
    with pytest.raises(ValueError, match="gcd"):
        cyclotomic_cosets(6, 2)


PARTITION_CASES = (
    [(n, 2) for n in (1, 3, 5, 7, 9, 15, 17, 21, 23, 31, 45, 63, 85, 89, 93, 127, 255)]
    + [(n, 3) for n in (4, 8, 13, 16, 40, 80)]
    + [(n, 4) for n in (3, 5, 15, 17, 51, 85)]
    + [(n, 5) for n in (4, 8, 24, 62, 124)]
    + [(n, 8) for n in (7, 9, 21, 63)]
    + [(n, 9) for n in (5, 8, 16, 40, 80)]
)


@pytest.mark.parametrize("n,q", PARTITION_CASES)
def test_coset_partition_and_factorisation(n, q):
    assert gcd(n, q) == 1
    cosets = cyclotomic_cosets(n, q)
    union = sorted(m for c in cosets for m in c.members)
    assert union == list(range(n))
    for c in cosets:
        assert c.representative == min(c.members)
        assert {(s * q) % n for s in c.members} == set(c.members)
    # the product check inside factor_xn_minus_1 raises on any mismatch
    factors = factor_xn_minus_1(n, q)
    assert sum(int(f.degree) for _, f in factors) == n
    for coset, f in factors:
        assert f.is_monic
        assert int(f.degree) == len(coset.members)


def test_minimal_polynomials_n15():
    expected = {
        (0,): "x + 1",
        (1, 2, 4, 8): "x^4 + x + 1",
        (3, 6, 9, 12): "x^4 + x^3 + x^2 + x + 1",
        (5, 10): "x^2 + x + 1",
        (7, 11, 13, 14): "x^4 + x^3 + 1",
    }
    for coset in cyclotomic_cosets(15, 2):
        assert render_poly(minimal_polynomial(15, 2, coset)) == expected[coset.members]


@pytest.mark.parametrize("n,q", [(15, 2), (7, 2), (5, 4), (21, 2)])
def test_minimal_polynomial_roots_exactly_its_coset(n, q):
    ext, alpha = nth_root_field(n, q)
    base = field_of_size(q)
    embed, _ = subfield_embedding(base, ext)
    for coset in cyclotomic_cosets(n, q):
        poly = minimal_polynomial(n, q, coset)
        for i in range(n):
            point = FieldElement(ext, ext.pow_i(alpha.value, i))
            value = poly.evaluate_embedded(point, embed)
            assert (value == 0) == (i in coset.members)


def test_minimal_polynomial_rejects_non_cosets():
    bogus = CyclotomicCoset(15, 2, 1, (1, 2, 3))
    with pytest.raises(ValueError):
        minimal_polynomial(15, 2, bogus)


def test_factor_x7_minus_1():
    rendered = sorted(render_poly(f) for _, f in factor_xn_minus_1(7, 2))
    assert rendered == ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]


def test_factor_x3_minus_1():
    rendered = sorted(render_poly(f) for _, f in factor_xn_minus_1(3, 2))
    assert rendered == ["x + 1", "x^2 + x + 1"]


def test_render_parse_round_trip():
    rng = random.Random(7)
    for field in (F2, F4, F5):
        for _ in range(200):
            poly = Polynomial.from_coeffs(field, [rng.randrange(field.q) for _ in range(rng.randrange(8))])
            assert parse_poly(render_poly(poly), field) == poly


def test_parse_poly_errors():
    with pytest.raises(ValueError):
        parse_poly("x^2 + y", F2)
    with pytest.raises(ValueError):
        parse_poly("3*x", F2)


def test_evaluate():
    f = P("x^3 + x + 1")
    one = F2.one
    assert f.evaluate(one) == one
    assert f.evaluate(F2.zero) == one
    g = parse_poly("a*x + 1", F4)
    assert g.evaluate(F4.alpha) == F4.alpha * F4.alpha + F4.one
