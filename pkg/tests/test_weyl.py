from math import comb

import pytest
from hypothesis import given, strategies as st

from richardson_quotient.errors import DimensionError, DomainError
from richardson_quotient.weyl import (
    GrassmannianContext, all_indices, all_m, bruhat_interval, bruhat_leq,
    check_index, coset_length, descent_hypothesis, nonnegative_weight_predicate,
    nonpositive_weight_predicate, root_coefficients, v_max, v_of_m,
    verify_extremality, w_min)

CTX = GrassmannianContext(10, 3, 3)


def small_contexts(max_n=12):
    return [GrassmannianContext(q * r + 1, r, q)
            for r in range(2, max_n) for q in range(1, max_n) if q * r + 1 <= max_n]


def test_context_from_any_two():
    assert GrassmannianContext.from_any(n=10, r=3) == CTX
    assert GrassmannianContext.from_any(n=10, q=3) == CTX
    assert GrassmannianContext.from_any(r=3, q=3) == CTX
    with pytest.raises(DomainError):
        GrassmannianContext.from_any(n=10, r=4)
    with pytest.raises(DomainError):
        GrassmannianContext.from_any(n=10, r=3, q=4)
    with pytest.raises(DomainError):
        GrassmannianContext.from_any(n=10)
    with pytest.raises(DomainError):
        GrassmannianContext(3, 1, 2)


def test_bruhat_examples():
    assert bruhat_leq((1, 3, 6), (4, 7, 10))
    assert bruhat_leq((1, 2, 3), (1, 2, 3))
    assert not bruhat_leq((2, 3, 4), (1, 5, 6))
    with pytest.raises(DimensionError):
        bruhat_leq((1, 2), (1, 2, 3))


def test_weight_predicates():
    assert nonpositive_weight_predicate((4, 7, 10), CTX)
    assert not nonpositive_weight_predicate((1, 2, 3), CTX)
    assert not nonpositive_weight_predicate((3, 7, 10), CTX)
    assert nonnegative_weight_predicate((1, 4, 7), CTX)
    assert nonnegative_weight_predicate((1, 2, 3), CTX)
    assert not nonnegative_weight_predicate((1, 4, 8), CTX)
    with pytest.raises(DomainError):
        nonpositive_weight_predicate((3, 2, 1), CTX)
    with pytest.raises(DimensionError):
        check_index((1, 2), CTX)


def test_closed_forms():
    assert w_min(CTX) == (4, 7, 10)
    assert w_min(GrassmannianContext(4, 3, 1)) == (2, 3, 4)
    assert w_min(GrassmannianContext(3, 2, 1)) == (2, 3)
    assert v_max(CTX) == (1, 4, 7)
    assert v_max(GrassmannianContext(3, 2, 1)) == (1, 2)
    assert v_max(GrassmannianContext(4, 3, 1)) == (1, 2, 3)
    assert v_of_m((2, 2), CTX) == (1, 3, 6)
    assert v_of_m((1, 3), CTX) == (1, 2, 7)
    assert v_of_m((3, 3), CTX) == v_max(CTX)
    with pytest.raises(DomainError):
        v_of_m((0, 2), CTX)
    with pytest.raises(DomainError):
        v_of_m((2,), CTX)


def test_lengths():
    assert coset_length((4, 7, 10)) == 15
    assert coset_length((1, 2, 3, 4)) == 0
    assert coset_length((1, 4, 7)) == 6


def test_root_coefficients_are_min_formula():
    # n * omega_r has alpha_k coefficient min(k, r) * (n - max(k, r))
    for ctx in small_contexts():
        top = tuple(range(1, ctx.r + 1))
        assert root_coefficients(top, ctx) == [
            min(k, ctx.r) * (ctx.n - max(k, ctx.r)) for k in range(1, ctx.n)]


@pytest.mark.parametrize("ctx", small_contexts(), ids=str)
def test_exhaustive_extremality(ctx):
    rep = verify_extremality(ctx)
    assert not rep.skipped
    assert rep.minimal == [w_min(ctx)]
    assert rep.maximal == [v_max(ctx)]
    assert coset_length(w_min(ctx)) == coset_length(v_max(ctx)) + ctx.n - 1
    assert descent_hypothesis(ctx)
    assert rep.ok


def test_extremality_skips_over_bound():
    rep = verify_extremality(CTX, bound=10)
    assert rep.skipped and "exceeds" in rep.reason and rep.ok


@pytest.mark.parametrize("ctx", small_contexts(10), ids=str)
def test_v_m_between_bounds(ctx):
    ms = list(all_m(ctx))
    assert len(ms) == ctx.q ** (ctx.r - 1)
    for m in ms:
        assert bruhat_leq(v_of_m(m, ctx), v_max(ctx))
        assert bruhat_leq(v_of_m(m, ctx), w_min(ctx))


@given(st.integers(2, 4), st.integers(1, 3), st.data())
def test_bruhat_interval_matches_filter(r, q, data):
    ctx = GrassmannianContext(q * r + 1, r, q)
    idx = sorted(all_indices(ctx))
    a = data.draw(st.sampled_from(idx))
    b = data.draw(st.sampled_from(idx))
    expected = [x for x in idx if bruhat_leq(a, x) and bruhat_leq(x, b)]
    assert bruhat_interval(a, b, ctx.n) == expected
    assert len(idx) == comb(ctx.n, ctx.r)
