"""
The Deodhar component of X^{v_m}_{w} and restrictions of Pluecker coordinates.

Points of the component are represented by an n x r matrix whose entries
are polynomials in c_{i,1} and c_{i,2}.  Layer 1 is the appearance of the
root subgroup in the final Coxeter block, layer 2 the earlier band
appearance; with this convention the (10,3,3), m=(2,2) matrix is

    1            0                  0
    c1,1         0                  0
    c1,1*c2,1    1                  0
    ...          c3,1 + c3,2        0
                 c3,2*c4,1          1
    ...
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import CertificateError, DomainError, NotDivisibleError
from .polynomial import (SparsePoly, const, determinant, divide_exact, parse,
                         prod, to_text, var)
from .tableau import (SequenceFamily, YoungTableau, check_family, check_shape,
                      sequences_of_gamma)
from .weyl import (GrassmannianContext, PluckerIndex, bruhat_leq, check_index,
                   check_m, v_of_m, w_min)


def _c1(i: int) -> SparsePoly:
    return var(i, 1)


def _c2(i: int) -> SparsePoly:
    return var(i, 2)


def _run(f, lo: int, hi: int) -> SparsePoly:
    """prod_{a=lo}^{hi} f(a), empty product is 1."""
    return prod(f(a) for a in range(lo, hi + 1))


def layer_two_variables(m: Sequence[int], ctx: GrassmannianContext) -> list[tuple[int, int]]:
    """The c_{i,2} that occur: i in [(j-1)q + m_j + 1, jq] for 1 <= j <= r-1."""
    m = check_m(m, ctx)
    q = ctx.q
    return [(i, 2) for j in range(1, ctx.r) for i in range((j - 1) * q + m[j - 1] + 1, j * q + 1)]


def all_variables(m: Sequence[int], ctx: GrassmannianContext) -> list[tuple[int, int]]:
    return sorted([(i, 1) for i in range(1, ctx.r * ctx.q + 1)] + layer_two_variables(m, ctx))


def mixed_band_entry(start: int, l: int) -> SparsePoly:
    """sum_{t=start}^{l-1} (prod_{a<t} c_{a,2})(prod_{a>=t} c_{a,1}) + prod c_{a,2}."""
    total = _run(_c2, start, l - 1)
    for t in range(start, l):
        total = total + _run(_c2, start, t - 1) * _run(_c1, t, l - 1)
    return total


@dataclass
class DeodharMatrix:
    ctx: GrassmannianContext
    m: tuple[int, ...]
    entries: list[list[SparsePoly]]
    # original column numbers of the r selected columns (the one-line notation of v_m)
    columns: tuple[int, ...] = field(default=())

    def e(self, l: int, j: int) -> SparsePoly:
        """e_{l,j}, 1-based."""
        return self.entries[l - 1][j - 1]

    def submatrix(self, idx: Sequence[int]) -> list[list[SparsePoly]]:
        return [list(self.entries[i - 1]) for i in idx]

    def to_text(self) -> str:
        head = (f"# deodhar matrix n={self.ctx.n} r={self.ctx.r} q={self.ctx.q} "
                f"m={','.join(map(str, self.m))} columns={','.join(map(str, self.columns))}")
        lines = [head]
        for row in self.entries:
            lines.append(" | ".join(to_text(p) for p in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "n": self.ctx.n, "r": self.ctx.r, "q": self.ctx.q,
            "m": list(self.m),
            "columns": list(self.columns),
            "entries": [[to_text(p) for p in row] for row in self.entries],
        }


def matrix_from_json(data: dict | str) -> DeodharMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    ctx = GrassmannianContext(data["n"], data["r"], data["q"])
    entries = [[parse(s) for s in row] for row in data["entries"]]
    return DeodharMatrix(ctx, tuple(data["m"]), entries, tuple(data["columns"]))


def build_matrix(m: Sequence[int], ctx: GrassmannianContext) -> DeodharMatrix:
    m = check_m(m, ctx)
    n, r, q = ctx.n, ctx.r, ctx.q
    zero = const(0)
    entries = [[zero] * r for _ in range(n)]
    for l in range(1, q + 2):
        entries[l - 1][0] = _run(_c1, 1, l - 1)
    for j in range(2, r + 1):
        s = (j - 2) * q + m[j - 2] + 1
        band = _run(_c2, s, (j - 1) * q)
        entries[s - 1][j - 1] = const(1)
        for l in range(s + 1, (j - 1) * q + 2):
            entries[l - 1][j - 1] = mixed_band_entry(s, l)
        for l in range((j - 1) * q + 2, j * q + 2):
            entries[l - 1][j - 1] = band * _run(_c1, (j - 1) * q + 1, l - 1)
    return DeodharMatrix(ctx, m, entries, v_of_m(m, ctx))


def interval_condition(idx: Sequence[int], m: Sequence[int], ctx: GrassmannianContext) -> bool:
    """No consecutive pair i_{j-1}, i_j lies inside [(j-2)q + m_{j-1} + 1, (j-1)q + 1]."""
    idx = check_index(idx, ctx)
    m = check_m(m, ctx)
    q = ctx.q
    for j in range(2, ctx.r + 1):
        lo, hi = (j - 2) * q + m[j - 2] + 1, (j - 1) * q + 1
        if lo <= idx[j - 2] <= hi and lo <= idx[j - 1] <= hi:
            return False
    return True


def in_support_window(idx: Sequence[int], m: Sequence[int], ctx: GrassmannianContext) -> bool:
    """v_m <= idx <= w componentwise."""
    return bruhat_leq(v_of_m(m, ctx), idx) and bruhat_leq(idx, w_min(ctx))


def plucker_restrict(M: DeodharMatrix, idx: Sequence[int], short_circuit: bool = True) -> SparsePoly:
    """Restriction of p_idx to the component: the minor on rows ``idx``."""
    idx = check_index(idx, M.ctx)
    if short_circuit and not in_support_window(idx, M.m, M.ctx):
        return const(0)
    return determinant(M.submatrix(idx))


def diagonal_product(M: DeodharMatrix, idx: Sequence[int]) -> SparsePoly:
    idx = check_index(idx, M.ctx)
    return prod(M.e(i, j) for j, i in enumerate(idx, start=1))


def common_factor(m: Sequence[int], ctx: GrassmannianContext) -> SparsePoly:
    """The monomial shared by the restrictions of all degree-one invariants."""
    m = check_m(m, ctx)
    r, q = ctx.r, ctx.q

    # first column
    def col1(L):
        return _run(_c1, 1, L)
    F = prod(col1(l - 1) ** r for l in range(1, m[0] + 1))
    F = F * prod(col1(l - 1) for l in range(m[0] + 1, q + 2))
    F = F * prod(col1(l - 2) ** (r - 1) for l in range(m[0] + 2, q + 2))

    # columns 2 .. r-1
    for j in range(2, r):
        band = _run(_c2, (j - 2) * q + m[j - 2] + 1, (j - 1) * q)

        def block(L, j=j, band=band):
            return band * _run(_c1, (j - 1) * q + 1, (j - 1) * q + L)
        mj = m[j - 1]
        F = F * prod(block(l - 1) ** r for l in range(2, mj + 1))
        F = F * prod(block(l - 1) ** j for l in range(mj + 1, q + 2))
        F = F * prod(block(l - 2) ** (r - j) for l in range(mj + 2, q + 2))

    # last column
    band = _run(_c2, (r - 2) * q + m[r - 2] + 1, (r - 1) * q)
    F = F * prod((band * _run(_c1, (r - 1) * q + 1, (r - 1) * q + l - 1)) ** r
                 for l in range(2, q + 2))
    return F


def x_polynomial(j: int, l: int, m: Sequence[int], ctx: GrassmannianContext) -> SparsePoly:
    """Quotient coordinate X_{(j-1)q+l} for 1 <= j <= r-1 and m_j+1 <= l <= q+1."""
    m = check_m(m, ctx)
    q = ctx.q
    if not (1 <= j <= ctx.r - 1 and m[j - 1] + 1 <= l <= q + 1):
        raise DomainError(f"no coordinate X for j={j}, l={l}, m={m}")
    base = (j - 1) * q
    head = _run(lambda a: _c1(base + a), l, q)
    mj = m[j - 1]
    tail = _run(lambda a: _c2(base + a), mj + 1, l - 1)
    for b in range(mj + 1, l):
        tail = tail + (_run(lambda a: _c2(base + a), mj + 1, b - 1)
                       * _run(lambda a: _c1(base + a), b, l - 1))
    return head * tail


def noncommon_factor(t: SequenceFamily, m: Sequence[int], ctx: GrassmannianContext) -> SparsePoly:
    t = check_family(t, m, ctx)
    return prod(x_polynomial(j, x, m, ctx) for j, seq in enumerate(t, start=1) for x in seq)


def restriction(gamma: YoungTableau, M: DeodharMatrix) -> SparsePoly:
    """Product of the restricted Pluecker coordinates over the rows of gamma."""
    return prod(plucker_restrict(M, row) for row in gamma.rows)


@dataclass
class FactorizationCertificate:
    gamma: YoungTableau
    sequence_family: SequenceFamily
    restriction: SparsePoly
    common: SparsePoly
    noncommon: SparsePoly

    def check(self) -> bool:
        return self.restriction == self.common * self.noncommon

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma.to_json(),
            "sequence_family": [list(s) for s in self.sequence_family],
            "restriction": to_text(self.restriction),
            "common": to_text(self.common),
            "noncommon": to_text(self.noncommon),
        }


def factorization_certificate(gamma: YoungTableau, m: Sequence[int], ctx: GrassmannianContext,
                              M: DeodharMatrix | None = None,
                              F: SparsePoly | None = None) -> FactorizationCertificate:
    """Check restriction(gamma) == F * prod X exactly, raising CertificateError if not."""
    m = check_m(m, ctx)
    check_shape(gamma, ctx, 1)
    M = M if M is not None else build_matrix(m, ctx)
    F = F if F is not None else common_factor(m, ctx)
    t = sequences_of_gamma(gamma, ctx, m)
    res = restriction(gamma, M)
    expected = noncommon_factor(t, m, ctx)
    try:
        quotient = divide_exact(res, F)
    except NotDivisibleError as exc:
        raise CertificateError(f"common factor does not divide restriction of {t}") from exc
    if quotient != expected:
        raise CertificateError(f"non-common factor mismatch for {t}")
    return FactorizationCertificate(gamma, t, res, F, quotient)


# -- the monomial identity used for the non-common factor -----------------

def blocks_of_sequence(seq: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Run-length data (b_1 < ... < b_y, t_{b_1} < ... < t_{b_y}) of a non-decreasing sequence."""
    if not seq:
        raise DomainError("empty sequence")
    if any(a > b for a, b in zip(seq, seq[1:])):
        raise DomainError(f"{tuple(seq)} is not non-decreasing")
    ends, values = [], []
    for pos, x in enumerate(seq, start=1):
        if pos == len(seq) or seq[pos] != x:
            ends.append(pos)
            values.append(x)
    return tuple(ends), tuple(values)


def appendix_identity(b: Sequence[int], t_values: Sequence[int], j: int,
                      m: Sequence[int], ctx: GrassmannianContext) -> bool:
    """Compare the block-exponent monomial with the per-entry product.

    Left side: prod_i prod_{l=t_{b_i}}^{t_{b_{i+1}}-1} c_l^{b_i} times
    prod_{l=t_{b_y}}^{q} c_l^{r-j}; right side: prod_m prod_{l=t_m}^{q} c_l,
    where c_l = c_{(j-1)q+l,1}.
    """
    m = check_m(m, ctx)
    b, tv = tuple(b), tuple(t_values)
    r, q = ctx.r, ctx.q
    if not 1 <= j <= r - 1:
        raise DomainError(f"j={j} outside [1, r-1]")
    if not b or len(b) != len(tv):
        raise DomainError("block ends and block values must be non-empty and of equal length")
    if b[0] < 1 or any(x >= y for x, y in zip(b, b[1:])) or b[-1] != r - j:
        raise DomainError(f"block ends {b} must increase strictly to r-j={r - j}")
    if any(x >= y for x, y in zip(tv, tv[1:])):
        raise DomainError(f"block values {tv} must increase strictly")
    if not all(m[j - 1] + 1 <= x <= q + 1 for x in tv):
        raise DomainError(f"block values {tv} leave [m_j+1, q+1]")

    def c(l):
        return _c1((j - 1) * q + l)

    y = len(b)
    left = const(1)
    for i in range(y - 1):
        left = left * prod(c(l) ** b[i] for l in range(tv[i], tv[i + 1]))
    left = left * prod(c(l) ** (r - j) for l in range(tv[-1], q + 1))

    seq = []
    prev = 0
    for end, x in zip(b, tv):
        seq.extend([x] * (end - prev))
        prev = end
    right = prod(_run(c, x, q) for x in seq)
    return left == right


def monomial_content(p: SparsePoly) -> dict:
    """Exponents of the largest monomial dividing every term of p."""
    content = None
    for tm in p.terms:
        d = dict(tm)
        content = d if content is None else {v: min(e, d.get(v, 0)) for v, e in content.items()}
    return {v: e for v, e in (content or {}).items() if e}


def common_factor_is_gcd(restrictions: Sequence[SparsePoly], F: SparsePoly) -> bool:
    """F is a unit-coefficient monomial equal to the gcd of the restrictions' monomial contents."""
    if not F.is_monomial() or F.leading_term()[1] != 1 or not restrictions:
        return False
    contents = [monomial_content(p) for p in restrictions]
    gcd = dict(contents[0])
    for cont in contents[1:]:
        gcd = {v: min(e, cont.get(v, 0)) for v, e in gcd.items()}
    gcd = {v: e for v, e in gcd.items() if e}
    return gcd == F.exponents()
