"""
Standard Young tableaux of rectangular shape (n*k) x r.

A tableau is stored as its chain of rows; for a rectangle, standardness is
exactly the statement that each row is strictly increasing and consecutive
rows are componentwise non-decreasing.  Row and column numbers in the
public helpers are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import Iterator, Sequence

from .errors import DomainError, SearchLimitExceeded, ShapeError
from .weyl import (GrassmannianContext, PluckerIndex, bruhat_leq, check_m,
                   v_of_m, w_min)

SequenceFamily = tuple[tuple[int, ...], ...]

DEFAULT_NODE_LIMIT = 10**7
DEFAULT_DEGREE_CAP = 3


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[PluckerIndex, ...]

    def __post_init__(self):
        if not self.rows:
            raise ShapeError("tableau has no rows")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise ShapeError("rows have different lengths")

    @classmethod
    def from_rows(cls, rows) -> YoungTableau:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def entry(self, i: int, j: int) -> int:
        """E_{i,j}, 1-based."""
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j - 1] for row in self.rows)

    def degree(self, ctx: GrassmannianContext) -> int:
        check_shape(self, ctx)
        return len(self.rows) // ctx.n

    def sort_key(self):
        return tuple(x for row in self.rows for x in row)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def to_text(self) -> str:
        w = max(len(str(x)) for row in self.rows for x in row)
        return "\n".join(" ".join(str(x).rjust(w) for x in row) for row in self.rows)

    def __str__(self):
        return self.to_text()


def tableau_from_json(data: str | list) -> YoungTableau:
    if isinstance(data, str):
        data = json.loads(data)
    return YoungTableau.from_rows(data)


def check_shape(T: YoungTableau, ctx: GrassmannianContext, k: int | None = None) -> int:
    """Return the degree of T, raising ShapeError if it is not (n*k) x r."""
    if T.width != ctx.r or len(T.rows) % ctx.n:
        raise ShapeError(f"tableau is {len(T.rows)}x{T.width}, not (n*k)x{ctx.r}")
    deg = len(T.rows) // ctx.n
    if k is not None and deg != k:
        raise ShapeError(f"tableau has degree {deg}, expected {k}")
    return deg


def is_standard(T: YoungTableau) -> bool:
    for row in T.rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    return all(bruhat_leq(a, b) for a, b in zip(T.rows, T.rows[1:]))


@dataclass
class ColumnCensus:
    """N[t][j]: boxes in column j holding t (1-based t and j)."""
    counts: dict[int, dict[int, int]]
    n: int
    r: int

    def N(self, t: int, j: int) -> int:
        return self.counts.get(t, {}).get(j, 0)

    def c(self, t: int) -> int:
        return sum(self.counts.get(t, {}).values())

    def weight(self) -> tuple[int, ...]:
        return tuple(self.c(t) for t in range(1, self.n + 1))


def census(T: YoungTableau, ctx: GrassmannianContext) -> ColumnCensus:
    counts: dict[int, dict[int, int]] = {}
    for row in T.rows:
        for j, x in enumerate(row, start=1):
            col = counts.setdefault(x, {})
            col[j] = col.get(j, 0) + 1
    return ColumnCensus(counts, ctx.n, ctx.r)


def is_t_invariant(T: YoungTableau, ctx: GrassmannianContext, k: int | None = None) -> bool:
    try:
        k = check_shape(T, ctx, k)
    except ShapeError:
        return False
    if any(x < 1 or x > ctx.n for row in T.rows for x in row):
        return False
    weight = census(T, ctx).weight()
    return all(c == ctx.r * k for c in weight)


def supports_richardson(T: YoungTableau, v: Sequence[int], w: Sequence[int]) -> bool:
    return bruhat_leq(v, T.rows[0]) and bruhat_leq(T.rows[-1], w)


def in_invariant_set(T: YoungTableau, m: Sequence[int], ctx: GrassmannianContext,
                     k: int | None = None) -> bool:
    """Membership in the set of invariant standard tableaux supported on X^{v_m}_{w}."""
    return (is_t_invariant(T, ctx, k) and is_standard(T)
            and supports_richardson(T, v_of_m(m, ctx), w_min(ctx)))


# -- enumeration ---------------------------------------------------------

def enumerate_A(m: Sequence[int], ctx: GrassmannianContext, k: int = 1,
                limit: int = DEFAULT_NODE_LIMIT) -> list[YoungTableau]:
    """All degree-k invariant standard tableaux supported on the Richardson variety.

    Backtracks over values t = 1..n, choosing how many copies of t go into
    each column.  With P_j the number of entries <= t in column j, strict
    rows are equivalent to P_{j+1}(t) <= P_j(t-1) for every t, the first-row
    bound to P_j(v_j - 1) = 0 and the last-row bound to P_j(w_j) = n*k.
    ``limit`` caps the number of search nodes.
    """
    m = check_m(m, ctx)
    if k < 1:
        raise DomainError("degree must be >= 1")
    v = v_of_m(m, ctx)
    w = w_min(ctx)
    n, r = ctx.n, ctx.r
    rows = n * k
    per_value = r * k
    nodes = 0
    results: list[list[list[int]]] = []
    prefix = [0] * r
    history: list[list[int]] = []

    def choose(t: int, j: int, left: int, old: list[int], new: list[int]):
        # distribute `left` copies of t over columns j..r-1 (0-based)
        nonlocal nodes
        if j == r:
            if left == 0:
                yield list(new)
            return
        if t < v[j] or t > w[j]:
            lo = hi = 0
        elif t == w[j]:
            lo = hi = rows - old[j]
        else:
            hi = rows - old[j]
            # column j must still be completable from values t+1..w_j
            lo = max(0, rows - old[j] - per_value * (w[j] - t))
        if j > 0:
            # strictness against the previous column, before adding t
            hi = min(hi, old[j - 1] - old[j])
        hi = min(hi, left)
        for x in range(lo, hi + 1):
            nodes += 1
            if nodes > limit:
                raise SearchLimitExceeded(
                    f"enumeration exceeded {limit} nodes for m={m}, k={k}, {ctx}")
            new.append(old[j] + x)
            yield from choose(t, j + 1, left - x, old, new)
            new.pop()

    def rec(t: int):
        if t > n:
            if all(p == rows for p in prefix):
                results.append([list(h) for h in history])
            return
        old = list(prefix)
        for new in choose(t, 0, per_value, old, []):
            prefix[:] = new
            history.append([b - a for a, b in zip(old, new)])
            rec(t + 1)
            history.pop()
        prefix[:] = old

    rec(1)
    out = [_tableau_from_counts(h, r) for h in results]
    out.sort(key=YoungTableau.sort_key)
    return out


def _tableau_from_counts(counts: list[list[int]], r: int) -> YoungTableau:
    cols = []
    for j in range(r):
        col = []
        for t, per_col in enumerate(counts, start=1):
            col.extend([t] * per_col[j])
        cols.append(col)
    return YoungTableau(tuple(zip(*cols)))


def count_A_formula(m: Sequence[int], ctx: GrassmannianContext, k: int = 1) -> int:
    """Product of binom(q - m_j + k(r-j), k(r-j)) over j.

    At k = 1 this is |A_1 x ... x A_{r-1}|; in general it is the dimension
    of multidegree (k(r-1), ..., k) forms on the product of projective spaces.
    """
    m = check_m(m, ctx)
    return prod(comb(ctx.q - m[j - 1] + k * (ctx.r - j), k * (ctx.r - j))
                for j in range(1, ctx.r))


# -- the bijection t -> Gamma_t ------------------------------------------

def check_family(t: SequenceFamily, m: Sequence[int], ctx: GrassmannianContext) -> SequenceFamily:
    m = check_m(m, ctx)
    t = tuple(tuple(seq) for seq in t)
    if len(t) != ctx.r - 1:
        raise DomainError(f"sequence family needs r-1={ctx.r - 1} sequences")
    for j, seq in enumerate(t, start=1):
        if len(seq) != ctx.r - j:
            raise DomainError(f"sequence {j} must have length r-j={ctx.r - j}")
        if any(a > b for a, b in zip(seq, seq[1:])):
            raise DomainError(f"sequence {j}={seq} is not non-decreasing")
        if any(not (m[j - 1] + 1 <= x <= ctx.q + 1) for x in seq):
            raise DomainError(f"sequence {j}={seq} leaves [m_j+1, q+1]")
    return t


def all_sequence_families(m: Sequence[int], ctx: GrassmannianContext) -> list[SequenceFamily]:
    """A_1 x ... x A_{r-1} in lexicographic order."""
    m = check_m(m, ctx)
    factors = [list(combinations_with_replacement(range(m[j - 1] + 1, ctx.q + 2), ctx.r - j))
               for j in range(1, ctx.r)]
    return [tuple(choice) for choice in product(*factors)]


def build_gamma(t: SequenceFamily, m: Sequence[int], ctx: GrassmannianContext) -> YoungTableau:
    """The degree-one tableau attached to a sequence family.

    Column 1 is r ones followed by B_1 in increasing order; column j
    (2 <= j <= r-1) starts with (j-2)q + t_{i,j-1} and continues with B_j;
    column r starts with (r-2)q + t_{1,r-1} followed by the values
    (r-1)q+2 .. rq+1, r copies each.  Taking minima greedily from a
    multiset is the same as listing it in increasing order.
    """
    t = check_family(t, m, ctx)
    n, r, q = ctx.n, ctx.r, ctx.q
    cols: list[list[int]] = []
    for j in range(1, r + 1):
        if j == 1:
            head = [1] * r
        else:
            head = [(j - 2) * q + x for x in t[j - 2]]
            if j == r:
                head = head[:1]
        if j < r:
            pool = [(j - 1) * q + x for x in range(2, q + 2) for _ in range(r)]
            for x in t[j - 1]:
                pool.remove((j - 1) * q + x)
            tail = sorted(pool)
        else:
            tail = []
            for row in range(2, n + 1):
                l = 1
                while (l - 1) * r + 1 < row:
                    l += 1
                tail.append((r - 1) * q + l)
        col = head + tail
        if len(col) != n:
            raise AssertionError(f"column {j} has {len(col)} entries")
        cols.append(col)
    return YoungTableau(tuple(zip(*cols)))


def sequences_of_gamma(T: YoungTableau, ctx: GrassmannianContext,
                       m: Sequence[int] | None = None) -> SequenceFamily:
    """Inverse of build_gamma: t_{i,j} = E_{i,j+1} - (j-1)q."""
    try:
        check_shape(T, ctx, 1)
    except ShapeError as exc:
        raise DomainError(str(exc)) from None
    if not (is_standard(T) and is_t_invariant(T, ctx, 1)):
        raise DomainError("tableau is not an invariant standard tableau")
    q = ctx.q
    t = tuple(tuple(T.entry(i, j + 1) - (j - 1) * q for i in range(1, ctx.r - j + 1))
              for j in range(1, ctx.r))
    lo = m if m is not None else (1,) * (ctx.r - 1)
    try:
        check_family(t, lo, ctx)
    except DomainError as exc:
        raise DomainError(f"tableau is outside the invariant set: {exc}") from None
    if m is not None and build_gamma(t, m, ctx) != T:
        raise DomainError("tableau is not of the form Gamma_t")
    return t


# -- structural predicates ----------------------------------------------

def _lemma_column_split(T, ctx, k) -> bool:
    # values (j-1)q+2 .. jq+1 sit in columns j, j+1; the top block sits in column r
    q, r = ctx.q, ctx.r
    for j in range(1, r + 1):
        lo, hi = (j - 1) * q + 2, j * q + 1
        allowed = {j, j + 1} if j < r else {r}
        for row in T.rows:
            for col, x in enumerate(row, start=1):
                if lo <= x <= hi and col not in allowed:
                    return False
    return True


def _lemma_column_head(T, m, ctx, k) -> bool:
    q, r = ctx.q, ctx.r
    for j in range(1, r):
        top = k * (r - j)
        for i in range(1, top + 1):
            if not ((j - 1) * q + m[j - 1] + 1 <= T.entry(i, j + 1) <= j * q + 1):
                return False
        if top + 1 <= len(T.rows) and T.entry(top + 1, j + 1) < j * q + 2:
            return False
    return True


def _corollary_last_column(T, ctx, k) -> bool:
    q, r = ctx.q, ctx.r
    if T.entry(k, r) > (r - 1) * q + 1:
        return False
    for i in range(k + 1, len(T.rows) + 1):
        l = 2
        while k * (r * (l - 1) + 1) < i:
            l += 1
        if T.entry(i, r) != (r - 1) * q + l:
            return False
    return True


def _lemma_forced_entries(T, m, ctx, k) -> bool:
    q, r = ctx.q, ctx.r
    for j in range(1, r):
        for l in range(2, q + 2):
            lo = k * (r * (l - 1) - j + 1) + 1
            hi = k * (r * l - j + 1) if l <= m[j - 1] else k * (r * (l - 1) + 1)
            for i in range(lo, hi + 1):
                if T.entry(i, j) != (j - 1) * q + l:
                    return False
    return True


def _corollary_two_values(T, m, ctx, k) -> bool:
    q, r = ctx.q, ctx.r
    for j in range(1, r):
        for l in range(m[j - 1] + 2, q + 2):
            allowed = {(j - 1) * q + l - 1, (j - 1) * q + l}
            for i in range(k * (r * (l - 2) + 1) + 1, k * (r * (l - 1) - j + 1) + 1):
                if T.entry(i, j) not in allowed:
                    return False
    return True


def _lemma_count_window(T, ctx, k) -> bool:
    # instantiate the lemma with the tightest admissible n1, n2
    q, r = ctx.q, ctx.r
    cen = census(T, ctx)
    for j in range(1, r):
        def below(l):
            return sum(cen.N((j - 1) * q + t, j + 1) for t in range(2, l + 1))
        n2 = below(2)
        if n2 > k * (r - j):
            return False
        for i in range(k * (r + 1 - j) + 1, k * (2 * r + 1 - j) - n2 + 1):
            if T.entry(i, j) != (j - 1) * q + 2:
                return False
        for l in range(3, q + 2):
            n1, n2 = below(l - 1), below(l)
            if not (n1 <= n2 <= k * (r - j)):
                return False
            for i in range(k * (r * (l - 1) + 1 - j) - n1 + 1, k * (r * l + 1 - j) - n2 + 1):
                if T.entry(i, j) != (j - 1) * q + l:
                    return False
    return True


def check_structure_lemmas(T: YoungTableau, m: Sequence[int], ctx: GrassmannianContext,
                           k: int | None = None) -> dict[str, bool]:
    """Evaluate the structural facts every invariant tableau must satisfy."""
    m = check_m(m, ctx)
    k = check_shape(T, ctx, k)
    return {
        "column_split": _lemma_column_split(T, ctx, k),
        "column_head": _lemma_column_head(T, m, ctx, k),
        "last_column": _corollary_last_column(T, ctx, k),
        "forced_entries": _lemma_forced_entries(T, m, ctx, k),
        "two_values": _corollary_two_values(T, m, ctx, k),
        "count_window": _lemma_count_window(T, ctx, k),
    }


# -- R_1 generation ------------------------------------------------------

def extract_degree_one(T: YoungTableau, ctx: GrassmannianContext,
                       k: int | None = None) -> tuple[YoungTableau, YoungTableau]:
    """Split a degree-k tableau into a degree-one factor and the rest.

    The factor takes rows k(i-1)+1 for i <= r and rows k*i for r < i <= n.
    """
    k = check_shape(T, ctx, k)
    if k < 2:
        raise DomainError("extraction needs degree >= 2")
    picked = [k * (i - 1) + 1 for i in range(1, ctx.r + 1)]
    picked += [k * i for i in range(ctx.r + 1, ctx.n + 1)]
    chosen = set(picked)
    first = tuple(T.rows[i - 1] for i in picked)
    rest = tuple(row for i, row in enumerate(T.rows, start=1) if i not in chosen)
    return YoungTableau(first), YoungTableau(rest)


def factor_completely(T: YoungTableau, ctx: GrassmannianContext) -> list[YoungTableau]:
    """Peel off degree-one factors until one remains."""
    k = check_shape(T, ctx)
    factors = []
    while k > 1:
        first, T = extract_degree_one(T, ctx, k)
        factors.append(first)
        k -= 1
    factors.append(T)
    return factors


def iter_rows_multiset(tableaux: Sequence[YoungTableau]) -> Iterator[PluckerIndex]:
    for T in tableaux:
        yield from T.rows
