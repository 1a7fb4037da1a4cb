import json
from collections import Counter
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from oracles import brute_force_A
from richardson_quotient.errors import DomainError, SearchLimitExceeded, ShapeError
from richardson_quotient.tableau import (
    YoungTableau, all_sequence_families, build_gamma, census, check_shape,
    check_structure_lemmas, count_A_formula, enumerate_A, extract_degree_one,
    factor_completely, in_invariant_set, is_standard, is_t_invariant,
    sequences_of_gamma, supports_richardson, tableau_from_json)
from richardson_quotient.weyl import GrassmannianContext, all_m, v_of_m, w_min

CTX = GrassmannianContext(10, 3, 3)
C723 = GrassmannianContext(7, 2, 3)

GOLDEN = Path(__file__).parent / "golden"


def merge(*tabs):
    return YoungTableau(tuple(sorted(row for T in tabs for row in T.rows)))


def tiny_cases():
    out = []
    for ctx in (GrassmannianContext(3, 2, 1), GrassmannianContext(5, 2, 2),
                GrassmannianContext(7, 3, 2), C723, CTX):
        out += [(ctx, m) for m in all_m(ctx)]
    return out


def test_is_standard_examples():
    rows = [(1, 3, 6), (1, 3, 7), (1, 4, 7), (2, 4, 8), (2, 5, 8), (3, 5, 8),
            (2, 5, 9), (3, 6, 9), (4, 6, 9), (4, 7, 10)]
    assert not is_standard(YoungTableau.from_rows(rows))
    # (2,5,9) and (3,5,8) are incomparable, so no chain order exists
    assert not is_standard(YoungTableau.from_rows(sorted(rows)))
    assert is_standard(YoungTableau.from_rows([(1, 2, 3)]))
    assert not is_standard(YoungTableau.from_rows([(1, 3), (1, 2)]))
    assert not is_standard(YoungTableau.from_rows([(2, 1)]))


def test_invariance_examples():
    assert not is_t_invariant(YoungTableau.from_rows([(1, 2, 3)]), CTX)
    tabs = enumerate_A((2, 2), CTX)
    assert all(is_t_invariant(T, CTX, 1) for T in tabs)
    both = merge(tabs[0], tabs[-1])
    assert is_t_invariant(both, CTX, 2)
    assert census(tabs[0], CTX).weight() == (3,) * 10


def test_supports_richardson_examples():
    T = build_gamma(((3, 3), (3,)), (2, 2), CTX)
    assert T.rows[0] == (1, 3, 6) and T.rows[-1] == (4, 7, 10)
    assert supports_richardson(T, (1, 3, 6), (4, 7, 10))
    first = YoungTableau.from_rows([(1, 2, 3)] + list(T.rows[1:]))
    assert not supports_richardson(first, v_of_m((2, 2), CTX), w_min(CTX))


def test_build_gamma_examples():
    assert build_gamma(((3, 3), (3,)), (2, 2), CTX).rows[0] == (1, 3, 6)
    assert build_gamma(((4, 4), (4,)), (2, 2), CTX).rows[0] == (1, 4, 7)
    with pytest.raises(DomainError):
        build_gamma(((2, 3), (3,)), (2, 2), CTX)
    with pytest.raises(DomainError):
        build_gamma(((4, 3), (3,)), (2, 2), CTX)
    with pytest.raises(DomainError):
        build_gamma(((3,), (3,)), (2, 2), CTX)


def test_enumeration_counts_examples():
    assert len(enumerate_A((2, 2), CTX)) == 6
    assert len(enumerate_A((3, 3), CTX)) == 1
    assert len(enumerate_A((1, 1), CTX)) == 18

    # frozen output, cross-checked against the brute-force oracle
    frozen = json.loads((GOLDEN / "A_10_3_3_m22.json").read_text())
    assert [T.to_json() for T in enumerate_A((2, 2), CTX)] == frozen
    assert [tuple(map(tuple, T)) for T in frozen] == brute_force_A((2, 2), CTX)


def test_enumeration_order_is_flattened_lex():
    tabs = enumerate_A((1, 1), CTX)
    keys = [T.sort_key() for T in tabs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_enumeration_limit_and_errors():
    with pytest.raises(SearchLimitExceeded):
        enumerate_A((1, 1), CTX, limit=5)
    with pytest.raises(DomainError):
        enumerate_A((1, 1), CTX, k=0)
    with pytest.raises(DomainError):
        enumerate_A((4, 1), CTX)


@pytest.mark.parametrize("ctx,m", tiny_cases(), ids=str)
def test_enumeration_matches_brute_force(ctx, m):
    assert [T.rows for T in enumerate_A(m, ctx)] == brute_force_A(m, ctx)


@pytest.mark.parametrize("ctx,k", [(C723, 2), (C723, 3), (GrassmannianContext(5, 2, 2), 3),
                                   (GrassmannianContext(7, 3, 2), 2)], ids=str)
def test_higher_degree_matches_brute_force(ctx, k):
    for m in all_m(ctx):
        tabs = enumerate_A(m, ctx, k)
        assert [T.rows for T in tabs] == brute_force_A(m, ctx, k)
        assert len(tabs) == count_A_formula(m, ctx, k)


@pytest.mark.parametrize("ctx,m", tiny_cases() + [
    (GrassmannianContext(13, 4, 3), m) for m in [(2, 2, 2), (1, 1, 1), (3, 1, 2)]] + [
    (GrassmannianContext(11, 2, 5), (i,)) for i in range(1, 6)], ids=str)
def test_bijection_and_count(ctx, m):
    tabs = enumerate_A(m, ctx)
    fams = all_sequence_families(m, ctx)
    built = sorted((build_gamma(t, m, ctx) for t in fams), key=YoungTableau.sort_key)
    assert built == tabs
    assert len(tabs) == count_A_formula(m, ctx)
    for t in fams:
        assert sequences_of_gamma(build_gamma(t, m, ctx), ctx, m) == t
    for T in tabs:
        assert build_gamma(sequences_of_gamma(T, ctx, m), m, ctx) == T
        assert in_invariant_set(T, m, ctx, 1)
        assert all(check_structure_lemmas(T, m, ctx).values())


def test_point_case_family():
    (T,) = enumerate_A((3, 3), CTX)
    assert sequences_of_gamma(T, CTX) == ((4, 4), (4,))


def test_sequences_of_gamma_rejects():
    with pytest.raises(DomainError):
        sequences_of_gamma(YoungTableau.from_rows([(1, 2, 3)]), CTX)
    T = enumerate_A((1, 1), CTX)[0]  # has a 2 in column 2
    with pytest.raises(DomainError):
        sequences_of_gamma(T, CTX, (2, 2))


@pytest.mark.parametrize("m", [(2, 2), (1, 2)])
def test_lemmas_degree_one(m):
    for T in enumerate_A(m, CTX):
        assert all(check_structure_lemmas(T, m, CTX, 1).values())


@pytest.mark.parametrize("ctx,m,k", [(C723, (1,), 2), (C723, (2,), 3), (CTX, (2, 2), 2),
                                     (CTX, (1, 3), 3), (GrassmannianContext(13, 4, 3), (2, 2, 2), 2)],
                         ids=str)
def test_lemmas_and_extraction_higher_degree(ctx, m, k):
    for T in enumerate_A(m, ctx, k):
        assert all(check_structure_lemmas(T, m, ctx, k).values())
        first, rest = extract_degree_one(T, ctx, k)
        assert Counter(first.rows) + Counter(rest.rows) == Counter(T.rows)
        assert in_invariant_set(first, m, ctx, 1)
        assert in_invariant_set(rest, m, ctx, k - 1)


def test_lemmas_detect_a_broken_tableau():
    T = enumerate_A((2, 2), CTX)[0]
    bad = YoungTableau((T.rows[-1],) + T.rows[1:-1] + (T.rows[0],))
    assert not all(check_structure_lemmas(bad, (2, 2), CTX).values())


def test_extract_from_concatenation():
    tabs = enumerate_A((2,), C723)
    for a in tabs:
        for b in tabs:
            first, rest = extract_degree_one(merge(a, b), C723, 2)
            assert first in tabs and rest in tabs


def test_factor_completely_degree_three():
    for T in enumerate_A((1,), C723, 3):
        parts = factor_completely(T, C723)
        assert len(parts) == 3
        assert all(in_invariant_set(P, (1,), C723, 1) for P in parts)
        assert sum((Counter(P.rows) for P in parts), Counter()) == Counter(T.rows)


def test_extract_errors():
    T = enumerate_A((2,), C723)[0]
    with pytest.raises(DomainError):
        extract_degree_one(T, C723)
    with pytest.raises(ShapeError):
        check_shape(T, CTX)
    with pytest.raises(ShapeError):
        YoungTableau(((1, 2), (1, 2, 3)))


def test_serialization_round_trip():
    for T in enumerate_A((1, 2), CTX):
        assert tableau_from_json(T.to_json()) == T
        assert tableau_from_json(json.dumps(T.to_json())) == T
        grid = T.to_text().splitlines()
        assert [tuple(map(int, line.split())) for line in grid] == list(T.rows)


@given(st.integers(2, 4), st.integers(1, 4), st.data())
def test_bijection_property(r, q, data):
    ctx = GrassmannianContext(q * r + 1, r, q)
    m = tuple(data.draw(st.integers(1, q)) for _ in range(r - 1))
    fams = all_sequence_families(m, ctx)
    t = data.draw(st.sampled_from(fams))
    T = build_gamma(t, m, ctx)
    assert in_invariant_set(T, m, ctx, 1)
    assert sequences_of_gamma(T, ctx, m) == t
    assert all(check_structure_lemmas(T, m, ctx, 1).values())
    assert len(fams) == count_A_formula(m, ctx)
