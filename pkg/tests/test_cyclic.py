"""Cyclic-code calculus: construction, duals, containment, matrices, descriptors."""

from __future__ import annotations

import itertools

import pytest

import oracle
from asymqec.cyclic import (
    bch,
    code_sum,
    contains,
    from_defining_set,
    full_space,
    generator_matrix,
    hamming,
    intersect,
    parity_check_matrix,
    parse_code,
    parse_residue_set,
    product_is_zero,
    repetition,
    rs,
    zero_code,
)
from asymqec.galois import make_field
from asymqec.polyring import Polynomial, parse_poly, render_poly
from asymqec.search import all_cyclic_codes

F2 = make_field(2)


def test_from_defining_set_examples():
    code = from_defining_set(15, 2, {1, 2, 4, 8})
    assert (code.n, code.k) == (15, 11)
    assert render_poly(code.generator_polynomial) == "x^4 + x + 1"
    assert from_defining_set(15, 2, {1, 2, 3, 4, 6, 8, 9, 12}).k == 7
    free = from_defining_set(9, 2, ())
    assert free.k == 9 and render_poly(free.generator_polynomial) == "1"


def test_non_closed_defining_set_rejected():
    with pytest.raises(ValueError) as err:
        from_defining_set(15, 2, {1, 2, 3})
    assert "not closed" in str(err.value)
    assert "coset" in str(err.value)


def test_dual_examples():
    ham = from_defining_set(15, 2, {1, 2, 4, 8})
    dual = ham.dual()
    assert dual.k == 4
    assert dual.T.sorted_members == (0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12)
    b5 = bch(15, 2, 5)
    assert b5.dual().T.sorted_members == (0, 1, 2, 4, 5, 8, 10)
    assert b5.dual().k == 8
    assert full_space(15, 2).dual() == zero_code(15, 2)


@pytest.mark.parametrize("n", [7, 15])
def test_dual_involution_exhaustive(n):
    for code in all_cyclic_codes(n, 2):
        assert code.dual().dual() == code
        assert code.k + code.dual().k == n


def test_intersect_sum_examples():
    b5 = bch(15, 2, 5)
    meet = intersect(b5, b5.dual())
    assert meet.k == 4
    assert len(meet.T.members) == 11
    assert code_sum(b5, b5) == b5
    assert intersect(b5, full_space(15, 2)) == b5
    with pytest.raises(ValueError, match="mismatched"):
        intersect(b5, bch(7, 2, 3))


def test_contains_examples():
    ham = bch(15, 2, 3)
    b5 = bch(15, 2, 5)
    assert contains(ham, b5)
    assert contains(ham, b5.dual())
    assert contains(b5, b5)
    assert not contains(b5, ham)


@pytest.mark.parametrize("n", [7, 15])
def test_dual_containment_symmetry(n):
    codes = all_cyclic_codes(n, 2)
    for c1, c2 in itertools.product(codes, repeat=2):
        assert contains(c1, c2.dual()) == contains(c2, c1.dual())


def test_bch_parameters():
    assert (bch(15, 2, 3).n, bch(15, 2, 3).k) == (15, 11)
    assert bch(15, 2, 5).k == 7
    assert bch(31, 2, 5).k == 21
    assert bch(31, 2, 7).k == 16
    assert bch(31, 2, 11).k == 11
    assert bch(31, 2, 15).k == 6
    assert bch(127, 2, 5).k == 113
    assert bch(127, 2, 15).k == 78
    with pytest.raises(ValueError, match="out of range"):
        bch(15, 2, 16)
    with pytest.raises(ValueError, match="out of range"):
        bch(15, 2, 1)


def test_bch_offset():
    narrow = bch(15, 2, 3, b=1)
    shifted = bch(15, 2, 3, b=2)
    assert narrow.T.sorted_members == (1, 2, 4, 8)
    assert shifted.T.sorted_members == (1, 2, 3, 4, 6, 8, 9, 12)


def test_rs_parameters():
    code = rs(8, 3)
    assert (code.n, code.q, code.k) == (7, 8, 5)
    assert rs(4, 2).k == 2
    assert rs(4, 3).k == 1
    with pytest.raises(ValueError):
        rs(8, 9)


def test_hamming_constructor():
    assert hamming(4, 2) == bch(15, 2, 3)
    assert hamming(3, 2).n == 7
    with pytest.raises(ValueError, match="not cyclic"):
        hamming(3, 4)


def test_repetition_and_boundary_codes():
    rep = repetition(15, 2)
    assert rep.k == 1
    assert zero_code(7, 2).k == 0
    assert full_space(7, 2).k == 7
    assert parity_check_matrix(full_space(7, 2)).row_count == 0


@pytest.mark.parametrize("code", [bch(15, 2, 5), bch(7, 2, 3), bch(31, 2, 7), rs(8, 3)])
def test_generator_parity_orthogonal(code):
    G = generator_matrix(code)
    H = parity_check_matrix(code)
    assert G.row_count == code.k
    assert H.row_count == code.n - code.k
    assert product_is_zero(G, H)


@pytest.mark.parametrize("code", [bch(15, 2, 5), bch(7, 2, 3), bch(15, 2, 3).dual()])
def test_matrices_full_rank(code):
    G = generator_matrix(code).bitmask_rows()
    H = parity_check_matrix(code).bitmask_rows()
    assert oracle.rank(G, code.n) == code.k
    assert oracle.rank(H, code.n) == code.n - code.k


def test_parity_annihilates_exactly_the_code():
    code = bch(7, 2, 3)
    H = parity_check_matrix(code)
    members = [v for v in range(128)
               if all(s == 0 for s in H.syndrome(tuple((v >> i) & 1 for i in range(7))))]
    assert len(members) == 16
    span = oracle.span(generator_matrix(code).bitmask_rows())
    assert set(members) == set(span)


def test_encode():
    code = bch(7, 2, 3)
    assert code.encode(Polynomial.zero(F2)) == (0,) * 7
    assert code.encode(Polynomial.one(F2)) == (1, 1, 0, 1, 0, 0, 0)
    m1 = parse_poly("x + 1", F2)
    m2 = parse_poly("x^3 + x", F2)
    lhs = code.encode(m1 + m2)
    rhs = tuple(a ^ b for a, b in zip(code.encode(m1), code.encode(m2)))
    assert lhs == rhs
    with pytest.raises(ValueError, match="too long"):
        code.encode(parse_poly("x^4", F2))


def test_is_codeword():
    code = bch(7, 2, 3)
    assert code.is_codeword((0,) * 7)
    word = code.encode(Polynomial.one(F2))
    assert code.is_codeword(word)
    assert code.is_codeword(word[-1:] + word[:-1])  # cyclic shift
    assert not code.is_codeword((1, 1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError, match="length"):
        code.is_codeword((0,) * 6)


def test_is_codeword_agrees_with_parity():
    for code in all_cyclic_codes(7, 2):
        H = parity_check_matrix(code)
        for v in range(128):
            vec = tuple((v >> i) & 1 for i in range(7))
            assert code.is_codeword(vec) == all(s == 0 for s in H.syndrome(vec))


def test_containment_criteria_consistency_all_pairs_n15():
    codes = all_cyclic_codes(15, 2)
    for c1, c2 in itertools.product(codes, repeat=2):
        contains(c1, c2)  # raises InternalConsistencyError on any disagreement


def test_descriptor_round_trip():
    for text in ["q=2 n=15 T={1,2,4,8}", "bch:n=15,q=2,delta=5", "hamming:m=4,q=2",
                 "rs:q=8,delta=3", "q=2,n=15,T={1,2,4,8}", "bch:n=15,q=2,delta=3,b=2"]:
        code = parse_code(text)
        assert parse_code(code.descriptor()) == code
    for code in all_cyclic_codes(15, 2):
        assert parse_code(code.descriptor()) == code


def test_descriptor_errors():
    with pytest.raises(ValueError):
        parse_code("q=2 n=15")
    with pytest.raises(ValueError):
        parse_code("mystery:n=15")
    with pytest.raises(ValueError):
        parse_code("q=2 n=15 T={1,2,3}")


def test_parse_residue_set():
    assert parse_residue_set("{3,6,9,12}") == (3, 6, 9, 12)
    assert parse_residue_set("3,6") == (3, 6)
    assert parse_residue_set("{}") == ()


def test_designed_distance_bound():
    assert bch(15, 2, 5).designed_distance_bound == 5
    assert bch(15, 2, 3).designed_distance_bound == 3
    assert full_space(15, 2).designed_distance_bound == 1
    assert zero_code(15, 2).designed_distance_bound == 16
    assert bch(15, 2, 3).dual().designed_distance_bound == 8  # run 0..6
