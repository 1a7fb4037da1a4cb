"""
Coordinates on the torus quotient and its identification with a product of
projective spaces.

For each j the coordinates X_{(j-1)q+l}, l = m_j+1..q+1, are homogeneous
coordinates of P^{q-m_j}; the degree-one invariants restrict to F times
monomials of degree r-j in the j-th group, i.e. the Segre-type embedding
by O(r-1) x ... x O(1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb, prod as iprod
from typing import Sequence

from .deodhar import (build_matrix, common_factor, layer_two_variables,
                      restriction, x_polynomial)
from .errors import DomainError, NotDivisibleError
from .polynomial import (DEFAULT_PRIME, SparsePoly, VarId, divide_exact,
                         eval_mod_p, prod, var)
from .tableau import enumerate_A, sequences_of_gamma, DEFAULT_NODE_LIMIT
from .weyl import GrassmannianContext, ParamM, check_m

DEFAULT_SEED = 20240611


@dataclass
class QuotientCoordinateSystem:
    ctx: GrassmannianContext
    m: ParamM
    # groups[j-1] lists (label, X_label) for label = (j-1)q + l, l = m_j+1..q+1
    groups: list[list[tuple[int, SparsePoly]]]

    def degree(self, j: int) -> int:
        return self.ctx.r - j

    def coordinates(self) -> list[SparsePoly]:
        return [x for group in self.groups for _, x in group]

    def labels(self) -> list[int]:
        return [label for group in self.groups for label, _ in group]

    def by_label(self) -> dict[int, SparsePoly]:
        return {label: x for group in self.groups for label, x in group}


def build_coordinates(m: Sequence[int], ctx: GrassmannianContext) -> QuotientCoordinateSystem:
    m = check_m(m, ctx)
    q = ctx.q
    groups = []
    for j in range(1, ctx.r):
        groups.append([((j - 1) * q + l, x_polynomial(j, l, m, ctx))
                       for l in range(m[j - 1] + 1, q + 2)])
    return QuotientCoordinateSystem(ctx, m, groups)


def triangular_parts(j: int, l: int, m: Sequence[int],
                     ctx: GrassmannianContext) -> tuple[SparsePoly, SparsePoly]:
    """(f, g) with X_{(j-1)q+l} = f * c_{(j-1)q+l-1,2} + g, for l >= m_j + 2."""
    m = check_m(m, ctx)
    q = ctx.q
    mj = m[j - 1]
    if not m[j - 1] + 2 <= l <= q + 1:
        raise DomainError(f"no triangular split for j={j}, l={l}")
    base = (j - 1) * q
    head = prod(var(base + a, 1) for a in range(l, q + 1))
    f = head * prod(var(base + a, 2) for a in range(mj + 1, l - 1))
    s = SparsePoly()
    for b in range(mj + 1, l):
        s = s + (prod(var(base + a, 2) for a in range(mj + 1, b))
                 * prod(var(base + a, 1) for a in range(b, l)))
    return f, head * s


def check_triangularity(sysm: QuotientCoordinateSystem) -> bool:
    """Each X is a pure layer-1 monomial or linear in a fresh layer-2 variable.

    For l >= m_j+2 the new variable is c_{(j-1)q+l-1,2}: neither f nor g
    involves it, and f involves no layer-2 variable of index >= that one.
    """
    ctx, m, q = sysm.ctx, sysm.m, sysm.ctx.q
    for j, group in enumerate(sysm.groups, start=1):
        base = (j - 1) * q
        for label, X in group:
            l = label - base
            if l == m[j - 1] + 1:
                expected = prod(var(base + a, 1) for a in range(l, q + 1))
                if X != expected:
                    return False
                continue
            pivot = (base + l - 1, 2)
            f, g = triangular_parts(j, l, m, ctx)
            if X != f * var(*pivot) + g:
                return False
            if pivot in f.variables() or pivot in g.variables():
                return False
            try:
                f2 = divide_exact(X - g, var(*pivot))
            except NotDivisibleError:
                return False
            if f2 != f:
                return False
            if any(v[1] == 2 and v[0] >= pivot[0] for v in f2.variables()):
                return False
    return True


def independence_variables(sysm: QuotientCoordinateSystem) -> list[VarId]:
    """Layer-2 band variables plus c_{(j-1)q+m_j+1,1} for each group with m_j < q."""
    q = sysm.ctx.q
    chosen = list(layer_two_variables(sysm.m, sysm.ctx))
    chosen += [((j - 1) * q + sysm.m[j - 1] + 1, 1)
               for j in range(1, sysm.ctx.r) if sysm.m[j - 1] < q]
    return sorted(chosen)


def rank_mod_p(rows: list[list[int]], prime: int) -> int:
    A = [[x % prime for x in row] for row in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, prime)
        A[rank] = [x * inv % prime for x in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % prime for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def jacobian_rank(polys: Sequence[SparsePoly], variables: Sequence[VarId],
                  point: dict[VarId, int], prime: int = DEFAULT_PRIME) -> int:
    rows = [[eval_mod_p(p.diff(v), point, prime) for v in variables] for p in polys]
    return rank_mod_p(rows, prime)


@dataclass
class IndependenceResult:
    independent: bool
    ranks: list[int]
    expected: int
    seed: int


def independence_check(sysm: QuotientCoordinateSystem, trials: int = 3,
                       seed: int = DEFAULT_SEED, prime: int = DEFAULT_PRIME,
                       coordinates: Sequence[SparsePoly] | None = None) -> IndependenceResult:
    """Randomised Jacobian-rank certificate of algebraic independence.

    Full rank at one point proves independence; a rank drop at every trial
    point is reported as dependent.  ``coordinates`` overrides the system's
    own list (used to inject a dependent family).  A group with m_j = q is
    the single constant coordinate of a P^0 factor and is left out.
    """
    if trials < 1:
        raise DomainError("need at least one trial")
    polys = list(coordinates) if coordinates is not None else sysm.coordinates()
    polys = [p for p in polys if p.variables()]
    variables = independence_variables(sysm)
    expected = sum(sysm.ctx.q - mj + 1 for mj in sysm.m if mj < sysm.ctx.q)
    needed = set(variables)
    for p in polys:
        needed |= p.variables()
    rng = random.Random(seed)
    ranks = []
    for _ in range(trials):
        point = {v: rng.randrange(1, prime) for v in sorted(needed)}
        ranks.append(jacobian_rank(polys, variables, point, prime))
    ok = len(polys) == expected and any(rk == expected for rk in ranks)
    return IndependenceResult(ok, ranks, expected, seed)


@dataclass
class SegreReport:
    sections: int
    matches: bool
    injective: bool
    basis_equal: bool
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.matches and self.injective and self.basis_equal


def multidegree_basis(sysm: QuotientCoordinateSystem) -> set[tuple[tuple[int, ...], ...]]:
    """Exponent data of all monomials of multidegree (r-1, ..., 1)."""
    per_group = [list(combinations_with_replacement([lab for lab, _ in group], sysm.degree(j)))
                 for j, group in enumerate(sysm.groups, start=1)]
    return set(product(*per_group))


def segre_consistency(m: Sequence[int], ctx: GrassmannianContext,
                      limit: int = DEFAULT_NODE_LIMIT) -> SegreReport:
    """Restricted degree-one invariants divided by F are exactly the multidegree monomials in X."""
    m = check_m(m, ctx)
    sysm = build_coordinates(m, ctx)
    X = sysm.by_label()
    M = build_matrix(m, ctx)
    F = common_factor(m, ctx)
    q = ctx.q
    seen_polys = set()
    image = set()
    mismatches = []
    tableaux = enumerate_A(m, ctx, 1, limit=limit)
    for gamma in tableaux:
        t = sequences_of_gamma(gamma, ctx, m)
        labels = tuple(tuple((j - 1) * q + x for x in seq) for j, seq in enumerate(t, start=1))
        expected = prod(X[lab] for group in labels for lab in group)
        try:
            got = divide_exact(restriction(gamma, M), F)
        except NotDivisibleError:
            got = None
        if got != expected:
            mismatches.append(t)
        seen_polys.add(got)
        image.add(labels)
    return SegreReport(
        sections=len(tableaux),
        matches=not mismatches,
        injective=len(seen_polys) == len(tableaux) == len(image),
        basis_equal=image == multidegree_basis(sysm),
        mismatches=mismatches,
    )


@dataclass
class QuotientIdentification:
    factors: list[tuple[int, int]]  # (projective dimension, bundle degree)
    section_count: int
    quotient_dimension: int

    def to_json(self) -> dict:
        return {
            "factors": [{"dim": d, "degree": e} for d, e in self.factors],
            "sections": self.section_count,
            "dimension": self.quotient_dimension,
        }

    def describe(self) -> str:
        """Human form; P^0 factors are dropped here but kept in ``factors``."""
        kept = [(d, e) for d, e in self.factors if d > 0]
        plural = "section" if self.section_count == 1 else "sections"
        if not kept:
            return f"point, {self.section_count} {plural}"
        spaces = " x ".join(f"P^{d}" for d, _ in kept)
        bundle = " ⊠ ".join(f"O({e})" for _, e in kept)
        return f"{spaces}, {bundle}, {self.section_count} {plural}"


def identify_quotient(m: Sequence[int], ctx: GrassmannianContext) -> QuotientIdentification:
    m = check_m(m, ctx)
    r, q = ctx.r, ctx.q
    factors = [(q - m[j - 1], r - j) for j in range(1, r)]
    sections = iprod(comb(d + e, e) for d, e in factors)
    dimension = sum(d for d, _ in factors)
    n_coords = sum(q - mj + 1 for mj in m)
    if dimension != n_coords - (r - 1):
        raise AssertionError("dimension count disagrees with the coordinate count")
    return QuotientIdentification(factors, sections, dimension)


def realize_product(targets: Sequence[int],
                    q: int | None = None) -> tuple[GrassmannianContext, ParamM]:
    """(ctx, m) whose quotient is P^{a_1} x ... x P^{a_l} with O(l) x ... x O(1).

    The smallest choice q = max(a) + 1 is the default; any larger q also
    works, with m_i = q - a_i.
    """
    targets = tuple(targets)
    if not targets:
        raise DomainError("need at least one projective factor")
    if any(a < 0 for a in targets):
        raise DomainError(f"negative dimension in {targets}")
    smallest = max(targets) + 1
    if q is None:
        q = smallest
    elif q < smallest:
        raise DomainError(f"q={q} is below max(a)+1={smallest}")
    r = len(targets) + 1
    ctx = GrassmannianContext(q * r + 1, r, q)
    return ctx, tuple(q - a for a in targets)
