"""
Index combinatorics on the Grassmannian G(r, n) with n = q*r + 1.

Minimal coset representatives of W / W_P for the maximal parabolic at
alpha_r are identified with increasing r-tuples in [1, n] (one-line
notation, 1-based).  Bruhat order on them is the componentwise order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, DomainError

PluckerIndex = tuple[int, ...]
ParamM = tuple[int, ...]

# exhaustive searches over I(r, n) are skipped above this many elements
DEFAULT_SEARCH_BOUND = 10**6


@dataclass(frozen=True)
class GrassmannianContext:
    n: int
    r: int
    q: int

    def __post_init__(self):
        if self.r < 2 or self.q < 1:
            raise DomainError(f"need r >= 2 and q >= 1, got r={self.r}, q={self.q}")
        if self.n != self.q * self.r + 1:
            raise DomainError(f"n={self.n} is not q*r+1 for r={self.r}, q={self.q}")

    @classmethod
    def from_any(cls, n: int | None = None, r: int | None = None,
                 q: int | None = None) -> GrassmannianContext:
        """Build from any two of (n, r, q), checking the third if given."""
        known = sum(x is not None for x in (n, r, q))
        if known < 2:
            raise DomainError("need at least two of n, r, q")
        if r is None:
            if (n - 1) % q:
                raise DomainError(f"q={q} does not divide n-1={n - 1}")
            r = (n - 1) // q
        elif q is None:
            if (n - 1) % r:
                raise DomainError(f"r={r} does not divide n-1={n - 1}")
            q = (n - 1) // r
        elif n is None:
            n = q * r + 1
        return cls(n, r, q)

    def __str__(self):
        return f"(n,r,q)=({self.n},{self.r},{self.q})"


def check_index(a: Sequence[int], ctx: GrassmannianContext) -> PluckerIndex:
    a = tuple(a)
    if len(a) != ctx.r:
        raise DimensionError(f"index {a} has length {len(a)}, expected r={ctx.r}")
    if not all(1 <= x <= ctx.n for x in a) or any(x >= y for x, y in zip(a, a[1:])):
        raise DomainError(f"{a} is not strictly increasing in [1, {ctx.n}]")
    return a


def check_m(m: Sequence[int], ctx: GrassmannianContext) -> ParamM:
    m = tuple(m)
    if len(m) != ctx.r - 1:
        raise DomainError(f"m={m} must have r-1={ctx.r - 1} entries")
    if not all(1 <= x <= ctx.q for x in m):
        raise DomainError(f"m={m} entries must lie in [1, q={ctx.q}]")
    return m


def all_m(ctx: GrassmannianContext) -> Iterator[ParamM]:
    """Every admissible m in lexicographic order."""
    def rec(prefix):
        if len(prefix) == ctx.r - 1:
            yield tuple(prefix)
            return
        for x in range(1, ctx.q + 1):
            yield from rec(prefix + [x])
    yield from rec([])


def bruhat_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise DimensionError(f"cannot compare {tuple(a)} and {tuple(b)}")
    return all(x <= y for x, y in zip(a, b))


def root_coefficients(w: Sequence[int], ctx: GrassmannianContext) -> list[int]:
    """Coefficients of w(n*omega_r) on alpha_1..alpha_{n-1}.

    The coefficient at alpha_k is the k-th partial sum of the weight's
    coordinates, n * #{j : w_j <= k} - r*k.
    """
    members = set(w)
    out = []
    count = 0
    for k in range(1, ctx.n):
        if k in members:
            count += 1
        out.append(ctx.n * count - ctx.r * k)
    return out


def nonpositive_weight_predicate(w: Sequence[int], ctx: GrassmannianContext) -> bool:
    w = check_index(w, ctx)
    return all(c <= 0 for c in root_coefficients(w, ctx))


def nonnegative_weight_predicate(v: Sequence[int], ctx: GrassmannianContext) -> bool:
    v = check_index(v, ctx)
    return all(c >= 0 for c in root_coefficients(v, ctx))


def w_min(ctx: GrassmannianContext) -> PluckerIndex:
    return tuple(i * ctx.q + 1 for i in range(1, ctx.r + 1))


def v_max(ctx: GrassmannianContext) -> PluckerIndex:
    return tuple(i * ctx.q + 1 for i in range(ctx.r))


def v_of_m(m: Sequence[int], ctx: GrassmannianContext) -> PluckerIndex:
    m = check_m(m, ctx)
    return (1,) + tuple(j * ctx.q + m[j] + 1 for j in range(ctx.r - 1))


def coset_length(w: Sequence[int]) -> int:
    return sum(x - i for i, x in enumerate(w, start=1))


def descent_hypothesis(ctx: GrassmannianContext) -> bool:
    """Is n*omega_r in the root lattice?

    omega_r = e_1 + ... + e_r - (r/n)(e_1 + ... + e_n); its alpha_k
    coefficient is the k-th partial sum of coordinates.
    """
    shift = Fraction(ctx.r, ctx.n)
    coords = [(1 if i <= ctx.r else 0) - shift for i in range(1, ctx.n + 1)]
    partial = Fraction(0)
    for k in range(1, ctx.n):
        partial += coords[k - 1]
        if (ctx.n * partial).denominator != 1:
            return False
    return True


def all_indices(ctx: GrassmannianContext) -> Iterator[PluckerIndex]:
    return combinations(range(1, ctx.n + 1), ctx.r)


def bruhat_interval(v: Sequence[int], w: Sequence[int], n: int) -> list[PluckerIndex]:
    """All increasing tuples a with v <= a <= w, in lexicographic order."""
    r = len(v)
    out: list[PluckerIndex] = []

    def rec(prefix: list[int]):
        i = len(prefix)
        if i == r:
            out.append(tuple(prefix))
            return
        lo = max(v[i], prefix[-1] + 1 if prefix else 1)
        for x in range(lo, min(w[i], n) + 1):
            prefix.append(x)
            rec(prefix)
            prefix.pop()

    rec([])
    return out


def minimal_elements(items: Iterable[PluckerIndex]) -> list[PluckerIndex]:
    items = list(items)
    return [a for a in items
            if not any(b != a and bruhat_leq(b, a) for b in items)]


def maximal_elements(items: Iterable[PluckerIndex]) -> list[PluckerIndex]:
    items = list(items)
    return [a for a in items
            if not any(b != a and bruhat_leq(a, b) for b in items)]


@dataclass
class ExtremalityReport:
    ctx: GrassmannianContext
    skipped: bool
    reason: str = ""
    minimal: list[PluckerIndex] | None = None
    maximal: list[PluckerIndex] | None = None

    @property
    def ok(self) -> bool:
        if self.skipped:
            return True
        return (self.minimal == [w_min(self.ctx)]
                and self.maximal == [v_max(self.ctx)]
                and coset_length(w_min(self.ctx)) - coset_length(v_max(self.ctx))
                == self.ctx.n - 1)


def verify_extremality(ctx: GrassmannianContext,
                       bound: int = DEFAULT_SEARCH_BOUND) -> ExtremalityReport:
    """Exhaustively locate the Bruhat-extremal elements of both weight predicates."""
    size = comb(ctx.n, ctx.r)
    if size > bound:
        return ExtremalityReport(ctx, skipped=True,
                                 reason=f"|I(r,n)|={size} exceeds bound {bound}")
    neg = []
    pos = []
    for a in all_indices(ctx):
        coeffs = root_coefficients(a, ctx)
        if all(c <= 0 for c in coeffs):
            neg.append(a)
        if all(c >= 0 for c in coeffs):
            pos.append(a)
    return ExtremalityReport(ctx, skipped=False,
                             minimal=minimal_elements(neg), maximal=maximal_elements(pos))
