import json
import random
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from richardson_quotient.deodhar import (
    FactorizationCertificate, appendix_identity, blocks_of_sequence, build_matrix,
    common_factor, common_factor_is_gcd, diagonal_product, factorization_certificate,
    in_support_window, interval_condition, layer_two_variables, matrix_from_json,
    noncommon_factor, plucker_restrict, restriction, x_polynomial)
from richardson_quotient.errors import CertificateError, DomainError
from richardson_quotient.polynomial import (const, divide_exact, determinant, determinant_elimination,
                                            eval_mod_p, parse, var)
from richardson_quotient.tableau import enumerate_A, sequences_of_gamma
from richardson_quotient.verify import random_block_structure
from richardson_quotient.weyl import GrassmannianContext, all_indices, all_m

GOLDEN = Path(__file__).parent / "golden"
CTX = GrassmannianContext(10, 3, 3)
M22 = build_matrix((2, 2), CTX)


def c(i, layer=1):
    return var(i, layer)


def suite():
    out = [(GrassmannianContext(7, 2, 3), (m,)) for m in (1, 2, 3)]
    out += [(CTX, m) for m in all_m(CTX)]
    out += [(GrassmannianContext(13, 4, 3), (2, 2, 2))]
    out += [(GrassmannianContext(11, 2, 5), (m,)) for m in range(1, 6)]
    return out


def test_matrix_golden_printed_example():
    assert M22.to_text() == (GOLDEN / "matrix_10_3_3_m22.txt").read_text()
    assert M22.e(4, 2) == c(3) + c(3, 2)
    assert M22.e(7, 3) == c(6) + c(6, 2)
    assert M22.e(10, 3) == c(6, 2) * c(7) * c(8) * c(9)
    assert M22.columns == (1, 3, 6)


def test_matrix_golden_hand_expanded():
    M = build_matrix((1,), GrassmannianContext(7, 2, 3))
    assert M.to_text() == (GOLDEN / "matrix_7_2_3_m1.txt").read_text()


@pytest.mark.parametrize("ctx,m", suite(), ids=str)
def test_matrix_shape(ctx, m):
    M = build_matrix(m, ctx)
    q = ctx.q
    assert all(M.e(l, 1).is_zero() for l in range(q + 2, ctx.n + 1))
    assert M.e(1, 1) == const(1)
    for j in range(2, ctx.r + 1):
        s = (j - 2) * q + m[j - 2] + 1
        assert all(M.e(l, j).is_zero() for l in range(1, s))
        assert M.e(s, j) == const(1)
        assert all(M.e(l, j).is_zero() for l in range(j * q + 2, ctx.n + 1))
    used = set().union(*(p.variables() for row in M.entries for p in row))
    assert {v for v in used if v[1] == 2} == set(layer_two_variables(m, ctx))
    assert matrix_from_json(json.dumps(M.to_json())).to_text() == M.to_text()


def test_interval_condition_examples():
    # (1,3,4): 1 is outside [3,4] for j=2 and 4 is outside [6,7] for j=3
    assert interval_condition((1, 3, 4), (2, 2), CTX)
    assert interval_condition((1, 4, 7), (2, 2), CTX)
    assert not interval_condition((3, 4, 7), (2, 2), CTX)
    assert not interval_condition((1, 6, 7), (2, 2), CTX)
    for T in enumerate_A((2, 2), CTX):
        assert all(interval_condition(row, (2, 2), CTX) for row in T.rows)


def test_restriction_examples():
    assert plucker_restrict(M22, (1, 3, 6)) == const(1)
    assert diagonal_product(M22, (1, 3, 6)) == const(1)
    expected = c(1) * (c(3) + c(3, 2)) * (c(6) + c(6, 2))
    assert plucker_restrict(M22, (2, 4, 7)) == expected
    assert diagonal_product(M22, (2, 4, 7)) == expected
    assert determinant(M22.submatrix((2, 4, 7))) == expected
    assert plucker_restrict(M22, (8, 9, 10)).is_zero()
    assert plucker_restrict(M22, (8, 9, 10), short_circuit=False).is_zero()


@pytest.mark.parametrize("ctx,m", [(CTX, m) for m in all_m(CTX)]
                         + [(GrassmannianContext(7, 2, 3), (2,)),
                            (GrassmannianContext(7, 3, 2), (1, 2))], ids=str)
def test_support_window_is_exact(ctx, m):
    M = build_matrix(m, ctx)
    for idx in all_indices(ctx):
        full = plucker_restrict(M, idx, short_circuit=False)
        assert full.is_zero() != in_support_window(idx, m, ctx)
        assert plucker_restrict(M, idx) == full


def test_common_factor_examples():
    F = common_factor((2, 2), CTX)
    assert F.is_monomial() and F.leading_term()[1] == 1
    ones = {v: 1 for v in F.variables()}
    assert eval_mod_p(F, ones) == 1
    for T in enumerate_A((2, 2), CTX):
        assert (restriction(T, M22) - F * noncommon_factor(sequences_of_gamma(T, CTX), (2, 2), CTX)).is_zero()


def test_common_factor_point_case():
    F = common_factor((3, 3), CTX)
    (T,) = enumerate_A((3, 3), CTX)
    assert restriction(T, build_matrix((3, 3), CTX)) == F


def test_noncommon_factor_examples():
    x3, x4 = c(3), c(3) + c(3, 2)
    x6, x7 = c(6), c(6) + c(6, 2)
    assert noncommon_factor(((3, 3), (3,)), (2, 2), CTX) == x3 ** 2 * x6
    assert noncommon_factor(((4, 4), (4,)), (2, 2), CTX) == x4 ** 2 * x7
    assert noncommon_factor(((3, 4), (3,)), (2, 2), CTX) == x3 * x4 * x6
    assert x_polynomial(1, 4, (2, 2), CTX) == x4
    with pytest.raises(DomainError):
        noncommon_factor(((2, 4), (3,)), (2, 2), CTX)


@pytest.mark.parametrize("ctx,m", suite(), ids=str)
def test_certificates_and_diagonals(ctx, m):
    M = build_matrix(m, ctx)
    F = common_factor(m, ctx)
    tabs = enumerate_A(m, ctx)
    for T in tabs:
        cert = factorization_certificate(T, m, ctx, M, F)
        assert cert.check()
        data = cert.to_json()
        assert parse(data["restriction"]) == cert.restriction
        assert parse(data["common"]) * parse(data["noncommon"]) == cert.restriction
    for idx in {row for T in tabs for row in T.rows}:
        assert interval_condition(idx, m, ctx)
        d = diagonal_product(M, idx)
        assert determinant(M.submatrix(idx)) == d
        assert determinant_elimination(M.submatrix(idx)) == d
    assert common_factor_is_gcd([restriction(T, M) for T in tabs], F)


def test_certificate_rejects_wrong_common_factor():
    T = enumerate_A((2, 2), CTX)[0]
    with pytest.raises(CertificateError):
        factorization_certificate(T, (2, 2), CTX, F=common_factor((2, 2), CTX) * c(1))
    with pytest.raises(CertificateError):
        factorization_certificate(T, (2, 2), CTX, F=common_factor((2, 2), CTX) * 2)
    bad = FactorizationCertificate(T, ((3, 3), (3,)), const(2), const(1), const(1))
    assert not bad.check()


def test_gcd_detects_non_gcd():
    tabs = enumerate_A((2, 2), CTX)
    res = [restriction(T, M22) for T in tabs]
    F = common_factor((2, 2), CTX)
    assert common_factor_is_gcd(res, F)
    assert not common_factor_is_gcd(res, divide_exact(F, c(1)))
    assert not common_factor_is_gcd(res, F * c(10))
    assert not common_factor_is_gcd(res, 2 * F)


def test_blocks_of_sequence():
    assert blocks_of_sequence((3, 3, 4, 6, 6)) == ((2, 3, 5), (3, 4, 6))
    assert blocks_of_sequence((5,)) == ((1,), (5,))
    with pytest.raises(DomainError):
        blocks_of_sequence((4, 3))
    with pytest.raises(DomainError):
        blocks_of_sequence(())


def test_appendix_examples():
    assert appendix_identity((1, 2), (3, 4), 1, (2, 2), CTX)
    assert appendix_identity((2,), (3,), 1, (2, 2), CTX)
    assert appendix_identity((1,), (4,), 2, (2, 2), CTX)
    with pytest.raises(DomainError):
        appendix_identity((1, 3), (3, 4), 1, (2, 2), CTX)
    with pytest.raises(DomainError):
        appendix_identity((1, 2), (4, 3), 1, (2, 2), CTX)
    with pytest.raises(DomainError):
        appendix_identity((1, 2), (2, 4), 1, (2, 2), CTX)
    with pytest.raises(DomainError):
        appendix_identity((1,), (3,), 3, (2, 2), CTX)


@given(st.integers(0, 2**32))
def test_appendix_random_blocks(seed):
    b, tv, j, m, ctx = random_block_structure(random.Random(seed))
    assert appendix_identity(b, tv, j, m, ctx)
