"""
Sparse multivariate polynomials over the integers.

Variables are the Deodhar coordinates ``c_{i,layer}``, identified by the pair
``(i, layer)``.  A monomial is a tuple of ``((i, layer), exponent)`` pairs
sorted by variable; a polynomial maps monomials to nonzero Python ints.

>>> x = var(3, 1) + var(3, 2)
>>> str(x * var(4, 1))
'c3,1*c4,1 + c3,2*c4,1'
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, NotDivisibleError, ShapeError

__all__ = [
    "VarId", "Monomial", "SparsePoly", "DEFAULT_PRIME",
    "var", "const", "prod", "add", "mul", "divide_exact", "eval_mod_p",
    "determinant", "determinant_elimination",
]

VarId = tuple[int, int]
Monomial = tuple[tuple[VarId, int], ...]

# 2^61 - 1 (Mersenne)
DEFAULT_PRIME = (1 << 61) - 1

ONE_MONO: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b if b divides a, else None."""
    d = dict(a)
    for v, e in b:
        have = d.get(v, 0)
        if have < e:
            return None
        if have == e:
            del d[v]
        else:
            d[v] = have - e
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial):
    # larger key = larger in graded lex, with c_{1,1} > c_{1,2} > c_{2,1} > ...
    return (_mono_degree(m), tuple((-v[0], -v[1], e) for v, e in m))


class SparsePoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {}
        if terms:
            self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> SparsePoly:
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        """True for a single term (any coefficient)."""
        return len(self.terms) == 1

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=-1)

    def variables(self) -> set[VarId]:
        return {v for m in self.terms for v, _ in m}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def exponents(self) -> dict[VarId, int]:
        """Exponent map of a monomial (coefficient ignored)."""
        if len(self.terms) != 1:
            raise DomainError("not a monomial")
        (m,) = self.terms
        return dict(m)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, int):
            return const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return SparsePoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative exponent")
        result = const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def diff(self, v: VarId) -> SparsePoly:
        """Formal partial derivative with respect to ``v``."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(v, 0)
            if not e:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            key = tuple(sorted(d.items()))
            out[key] = out.get(key, 0) + c * e
        return SparsePoly(out)

    # -- rendering -----------------------------------------------------

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"SparsePoly({to_text(self)!r})"


def var(i: int, layer: int = 1) -> SparsePoly:
    if layer not in (1, 2) or i < 1:
        raise DomainError(f"bad variable c{i},{layer}")
    return SparsePoly._raw({(((i, layer), 1),): 1})


def const(c: int) -> SparsePoly:
    return SparsePoly._raw({ONE_MONO: c} if c else {})


def monomial(exps: Mapping[VarId, int], coeff: int = 1) -> SparsePoly:
    m = tuple(sorted((v, e) for v, e in exps.items() if e))
    return SparsePoly({m: coeff})


def prod(factors: Iterable[SparsePoly]) -> SparsePoly:
    result = const(1)
    for f in factors:
        result = result * f
    return result


def add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p + q


def mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def divide_exact(p: SparsePoly, d: SparsePoly) -> SparsePoly:
    """Return s with s*d == p, raising NotDivisibleError otherwise.

    Leading-term division in graded lex order: when d divides p the
    remainder reaches zero, and any leftover signals non-divisibility.
    """
    if d.is_zero():
        raise DomainError("division by zero polynomial")
    ld_mono, ld_coef = d.leading_term()
    rem = dict(p.terms)
    quot: dict[Monomial, int] = {}
    while rem:
        lm = max(rem, key=_grlex_key)
        c = rem[lm]
        qm = _mono_div(lm, ld_mono)
        if qm is None or c % ld_coef:
            raise NotDivisibleError(f"{to_text(d)} does not divide {to_text(p)}")
        qc = c // ld_coef
        quot[qm] = qc
        for m, dc in d.terms.items():
            key = _mono_mul(qm, m)
            s = rem.get(key, 0) - qc * dc
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return SparsePoly._raw(quot)


def eval_mod_p(p: SparsePoly, assignment: Mapping[VarId, int], prime: int = DEFAULT_PRIME) -> int:
    """Evaluate ``p`` at ``assignment`` in Z/prime."""
    total = 0
    for m, c in p.terms.items():
        t = c % prime
        for v, e in m:
            try:
                x = assignment[v]
            except KeyError:
                raise DomainError(f"no value assigned to c{v[0]},{v[1]}") from None
            t = t * pow(x, e, prime) % prime
        total = (total + t) % prime
    return total


# -- determinants ------------------------------------------------------

def _check_square(M: Sequence[Sequence[SparsePoly]]) -> int:
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ShapeError("matrix is not square")
    return n


def determinant(M: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Laplace expansion along the first column, recursively.

    Zero entries are skipped and minors are memoised on their row set, so
    the banded matrices met in practice expand in a handful of steps.
    """
    n = _check_square(M)
    if n == 0:
        return const(1)
    memo: dict[tuple[int, ...], SparsePoly] = {}

    def minor(rows: tuple[int, ...]) -> SparsePoly:
        # rows of the minor on columns n-len(rows) .. n-1
        if rows in memo:
            return memo[rows]
        col = n - len(rows)
        if len(rows) == 1:
            res = M[rows[0]][col]
        else:
            res = const(0)
            for pos, i in enumerate(rows):
                e = M[i][col]
                if e.is_zero():
                    continue
                sub = minor(rows[:pos] + rows[pos + 1:])
                if sub.is_zero():
                    continue
                term = e * sub
                res = res - term if pos % 2 else res + term
        memo[rows] = res
        return res

    return minor(tuple(range(n)))


def determinant_elimination(M: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Fraction-free (Bareiss) elimination; independent check on ``determinant``."""
    n = _check_square(M)
    if n == 0:
        return const(1)
    A = [list(row) for row in M]
    sign = 1
    prev = const(1)
    for k in range(n - 1):
        if A[k][k].is_zero():
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return const(0)
        piv = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = divide_exact(A[i][j] * piv - A[i][k] * A[k][j], prev)
        prev = piv
    return A[n - 1][n - 1] if sign > 0 else -A[n - 1][n - 1]


# -- text form ---------------------------------------------------------

def _mono_text(m: Monomial) -> str:
    parts = []
    for (i, layer), e in m:
        parts.append(f"c{i},{layer}" if e == 1 else f"c{i},{layer}^{e}")
    return "*".join(parts)


def to_text(p: SparsePoly) -> str:
    """Canonical rendering: graded-lex descending, e.g. ``c3,1 + c3,2``."""
    if not p.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = str(a)
        elif a == 1:
            body = _mono_text(m)
        else:
            body = f"{a}*{_mono_text(m)}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(?:c(\d+),([12])(?:\^(\d+))?|(\d+))$")


def parse(text: str) -> SparsePoly:
    """Inverse of ``to_text`` (accepts any order of terms and factors)."""
    s = text.strip()
    if not s:
        raise DomainError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # split yields ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise DomainError(f"cannot parse {text!r}")
    result = const(0)
    for sign, term in zip(pieces[1::2], pieces[2::2]):
        coeff = 1
        exps: dict[VarId, int] = {}
        for factor in term.split("*"):
            mt = _FACTOR.match(factor.strip())
            if mt is None:
                raise DomainError(f"cannot parse factor {factor!r} in {text!r}")
            if mt.group(4) is not None:
                coeff *= int(mt.group(4))
            else:
                v = (int(mt.group(1)), int(mt.group(2)))
                exps[v] = exps.get(v, 0) + int(mt.group(3) or 1)
        result = result + monomial(exps, -coeff if sign == "-" else coeff)
    return result
