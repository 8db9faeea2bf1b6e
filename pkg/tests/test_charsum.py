import cmath
import itertools
import math

import numpy as np
import pytest

from diagfermat.charsum import (all_characters, character, character_table, eval_char, gauss_sum,
                                gauss_sum_direct, gauss_sums, jacobi_J, jacobi_J0, round_integral)
from diagfermat.errors import FieldMismatch, OrderMismatch, RoundingBudgetExceeded
from diagfermat.field import field_of_order, make_field

F11 = make_field(11)


def zeta(k, m):
    return cmath.exp(2j * math.pi * k / m)


def brute_gauss(chi):
    F = chi.field
    total = 0j
    for a in range(1, F.q):
        # trace via Frobenius conjugates, independent of the package's trace basis
        t, conj = 0, a
        for _ in range(F.n):
            t = F.add(t, conj)
            conj = F.pow(conj, F.p)
        total += eval_char(chi, a) * zeta(t, F.p)
    return total


def brute_jacobi(chis, target):
    F = chis[0].field
    total = 0j
    for alphas in itertools.product(range(F.q), repeat=len(chis) - 1):
        s = 0
        for a in alphas:
            s = F.add(s, a)
        last = F.sub(target, s)
        term = eval_char(chis[-1], last)
        for chi, a in zip(chis, alphas):
            term *= eval_char(chi, a)
        total += term
    return total


def test_character_examples():
    eps = character(F11, 5, 0)
    assert all(eval_char(eps, x) == 1 for x in range(1, 11))
    chi1 = character(F11, 5, 1)
    assert eval_char(chi1, F11.generator) == pytest.approx(zeta(1, 5))
    with pytest.raises(OrderMismatch):
        character(F11, 3, 1)
    with pytest.raises(OrderMismatch):
        character(F11, 10, 1)


def test_character_values():
    eps = character(F11, 5, 0)
    assert eval_char(eps, 0) == 0
    for j in range(5):
        chi = character(F11, 5, j)
        assert eval_char(chi, 1) == pytest.approx(1)
        assert all(abs(abs(eval_char(chi, x)) - 1) < 1e-12 for x in range(1, 11))
    # dlog(8) = 3
    assert eval_char(character(F11, 5, 1), 8) == pytest.approx(zeta(3, 5))


@pytest.mark.parametrize("q, ell", [(11, 5), (13, 3), (16, 5), (25, 3), (49, 3)])
def test_characters_form_cyclic_group(q, ell):
    F = field_of_order(q)
    chis = all_characters(F, ell)
    xs = np.arange(q)
    for a, b in itertools.product(chis, repeat=2):
        prod = a * b
        assert np.allclose(eval_char(prod, xs), eval_char(a, xs) * eval_char(b, xs))
        assert prod in chis
    for chi in chis:
        assert np.allclose(eval_char(chi.conj(), xs), np.conj(eval_char(chi, xs)))
        assert chi.conj().j == (ell - chi.j) % ell
    assert np.allclose(character_table(F, ell)[1], eval_char(chis[1], xs))


def test_characters_on_different_fields():
    other = character(make_field(31), 5, 1)
    with pytest.raises(FieldMismatch):
        character(F11, 5, 1) * other
    with pytest.raises(FieldMismatch):
        jacobi_J([character(F11, 5, 1), other])


def test_gauss_sum_of_trivial_character():
    for q in (11, 16, 25):
        assert gauss_sum(character(field_of_order(q), 5 if q != 25 else 3, 0)) == pytest.approx(-1)


def test_gauss_sum_norm_example():
    g = gauss_sum(character(F11, 5, 1))
    assert abs(abs(g) ** 2 - 11) < 1e-9


def test_quadratic_gauss_sum_over_f5():
    chi = character(make_field(5), 2, 1)
    # direct summation: residues 1, 4 vs non-residues 2, 3
    direct = sum(zeta(a, 5) for a in (1, 4)) - sum(zeta(a, 5) for a in (2, 3))
    assert direct == pytest.approx(math.sqrt(5))
    assert gauss_sum(chi) == pytest.approx(math.sqrt(5))


@pytest.mark.parametrize("q, ell", [(11, 5), (13, 3), (8, 7), (9, 2), (16, 3), (16, 5), (25, 3), (27, 13), (49, 3)])
def test_gauss_sums_match_brute_force(q, ell):
    F = field_of_order(q)
    for chi in all_characters(F, ell):
        expect = brute_gauss(chi)
        assert gauss_sum(chi) == pytest.approx(expect, abs=1e-9)
        assert gauss_sum_direct(chi) == pytest.approx(expect, abs=1e-9)


def test_gauss_sum_of_conjugate():
    F = make_field(31)
    for chi in all_characters(F, 5):
        conj_sum = sum(np.conj(eval_char(chi, x)) * zeta(x, 31) for x in range(31))
        assert gauss_sum(chi.conj()) == pytest.approx(conj_sum, abs=1e-9)


def test_jacobi_examples():
    chis = all_characters(F11, 5)
    eps = chis[0]
    assert jacobi_J([eps, eps]).real == pytest.approx(9)
    # with chi(0) = 0 for every character, (0, 0) contributes nothing
    assert brute_jacobi([eps, eps], 0).real == pytest.approx(10)
    assert jacobi_J0([eps, eps]).real == pytest.approx(10)
    for chi in chis[1:]:
        assert jacobi_J([chi, chi.conj()]) == pytest.approx(-eval_char(chi, F11.neg(1)))
    g = gauss_sums(F11, 5)
    assert jacobi_J([chis[1], chis[2]]) == pytest.approx(g[1] * g[2] / g[3], abs=1e-9)
    with pytest.raises(ValueError):
        jacobi_J0([chis[1]])


def test_j0_reduction_example():
    chis = all_characters(F11, 5)
    c1, c2 = chis[1], chis[2]
    lhs = jacobi_J0([c1, c2, c2])  # product chi_5 = trivial
    rhs = eval_char(c2, F11.neg(1)) * 10 * jacobi_J([c1, c2])
    assert abs(lhs - rhs) < 1e-9


@pytest.mark.parametrize("q, ell", [(7, 3), (11, 5), (9, 2), (16, 3), (13, 3)])
def test_jacobi_matches_brute_force(q, ell):
    F = field_of_order(q)
    chis = all_characters(F, ell)
    for combo in itertools.product(chis, repeat=2):
        assert jacobi_J(list(combo)) == pytest.approx(brute_jacobi(list(combo), 1), abs=1e-9)
        assert jacobi_J0(list(combo)) == pytest.approx(brute_jacobi(list(combo), 0), abs=1e-9)
    for combo in list(itertools.product(chis, repeat=3))[:12]:
        assert jacobi_J(list(combo)) == pytest.approx(brute_jacobi(list(combo), 1), abs=1e-8)
        assert jacobi_J0(list(combo)) == pytest.approx(brute_jacobi(list(combo), 0), abs=1e-8)


@pytest.mark.parametrize("q, ell", [(13, 3), (31, 5), (16, 5), (81, 5), (64, 7), (125, 31)])
def test_norm_orthogonality_conjugate(q, ell):
    F = field_of_order(q)
    g = gauss_sums(F, ell)
    minus_one = F.neg(1)
    for chi in all_characters(F, ell):
        s = eval_char(chi, np.arange(1, q)).sum()
        if chi.is_trivial:
            assert abs(s - (q - 1)) < 1e-9
            continue
        assert abs(s) < 1e-9
        assert abs(abs(g[chi.j]) ** 2 - q) < 1e-6 * q
        assert abs(g[chi.j] * g[chi.conj().j] - eval_char(chi, minus_one) * q) < 1e-6 * q


def test_round_integral():
    assert round_integral(3.0000000001 + 1e-12j) == 3
    assert round_integral(-12.0 + 0j, magnitude=100) == -12
    with pytest.raises(RoundingBudgetExceeded):
        round_integral(2.4)
