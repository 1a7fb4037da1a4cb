"""
The full verification suite for one (ctx, m), assembled into an ordered report.

Each check returns a Verdict.  ``faults`` names checks whose input data is
deliberately corrupted so that the failure path of the report can be tested.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .deodhar import (appendix_identity, blocks_of_sequence, build_matrix,
                      common_factor, common_factor_is_gcd, diagonal_product,
                      factorization_certificate, in_support_window,
                      interval_condition, plucker_restrict, restriction)
from .errors import CertificateError, SearchLimitExceeded
from .polynomial import determinant, var
from .quotient import (DEFAULT_SEED, build_coordinates, check_triangularity,
                       identify_quotient, independence_check, segre_consistency)
from .tableau import (DEFAULT_DEGREE_CAP, DEFAULT_NODE_LIMIT, YoungTableau,
                      all_sequence_families, build_gamma, check_structure_lemmas,
                      count_A_formula, enumerate_A, extract_degree_one,
                      in_invariant_set, sequences_of_gamma)
from .weyl import (DEFAULT_SEARCH_BOUND, GrassmannianContext, ParamM,
                   all_indices, bruhat_leq, check_m, coset_length, descent_hypothesis,
                   v_max, v_of_m, verify_extremality, w_min)

CHECKS = ("weyl", "bijection", "lemmas", "r1", "diag", "factorization",
          "appendix", "independence", "segre", "quotient")

# higher-degree enumerations predicted to exceed this are skipped
HIGHER_DEGREE_CAP = 10**5
# the all-indices support-window scan is skipped above this many indices
SUPPORT_SCAN_BOUND = 5000


@dataclass
class RunConfig:
    ctx: GrassmannianContext
    m: ParamM
    kmax: int = DEFAULT_DEGREE_CAP
    trials: int = 3
    seed: int = DEFAULT_SEED
    limit: int = DEFAULT_NODE_LIMIT
    weyl_bound: int = DEFAULT_SEARCH_BOUND
    faults: frozenset[str] = frozenset()
    timings: bool = False

    def __post_init__(self):
        self.m = check_m(self.m, self.ctx)
        unknown = set(self.faults) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown check(s) for fault injection: {sorted(unknown)}")


@dataclass
class Verdict:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""
    count: int = 0
    seconds: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {"name": self.name, "status": self.status, "detail": self.detail,
               "count": self.count}
        if timings:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class VerificationReport:
    config: RunConfig
    verdicts: list[Verdict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v.status in ("pass", "skip") for v in self.verdicts)

    def to_json(self) -> dict:
        c = self.config
        return {
            "schema": 1,
            "command": "verify",
            "config": {"n": c.ctx.n, "r": c.ctx.r, "q": c.ctx.q, "m": list(c.m),
                       "kmax": c.kmax, "trials": c.trials, "seed": c.seed,
                       "limit": c.limit, "faults": sorted(c.faults)},
            "verdicts": [v.to_json(c.timings) for v in self.verdicts],
            "counts": dict(self.counts),
            "overall": "pass" if self.ok else "fail",
        }

    def to_text(self) -> str:
        c = self.config
        m = ",".join(map(str, c.m))
        lines = [f"verify {c.ctx} m=({m}) kmax={c.kmax} trials={c.trials} seed={c.seed}"]
        if c.faults:
            lines.append(f"injected faults: {', '.join(sorted(c.faults))}")
        for v in self.verdicts:
            line = f"  {v.name:<14}{v.status:<6}{v.detail}"
            if c.timings:
                line += f" [{v.seconds:.3f}s]"
            lines.append(line.rstrip())
        lines.append("counts: " + ", ".join(f"{k}={v}" for k, v in self.counts.items()))
        lines.append(f"overall: {'pass' if self.ok else 'fail'}")
        return "\n".join(lines)


class _State:
    """Objects shared between checks, built once."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.tableaux = enumerate_A(cfg.m, cfg.ctx, 1, limit=cfg.limit)
        self.M = build_matrix(cfg.m, cfg.ctx)
        self.F = common_factor(cfg.m, cfg.ctx)
        self._higher: dict[int, list[YoungTableau] | str] = {}

    def degree(self, k: int) -> list[YoungTableau] | str:
        """Degree-k tableaux, or the reason they were not enumerated."""
        if k not in self._higher:
            cfg = self.cfg
            predicted = count_A_formula(cfg.m, cfg.ctx, k)
            if predicted > HIGHER_DEGREE_CAP:
                self._higher[k] = f"degree {k}: {predicted} tableaux exceeds {HIGHER_DEGREE_CAP}"
            else:
                try:
                    self._higher[k] = enumerate_A(cfg.m, cfg.ctx, k, limit=cfg.limit)
                except SearchLimitExceeded as exc:
                    self._higher[k] = str(exc)
        return self._higher[k]


def _check_weyl(st: _State, fault: bool) -> Verdict:
    ctx, m = st.cfg.ctx, st.cfg.m
    rep = verify_extremality(ctx, st.cfg.weyl_bound)
    w, v, vm = w_min(ctx), v_max(ctx), v_of_m(ctx=ctx, m=m)
    expected_min = v if fault else w
    side = (descent_hypothesis(ctx) and bruhat_leq(vm, v) and bruhat_leq(vm, w)
            and coset_length(w) == coset_length(v) + ctx.n - 1)
    if rep.skipped:
        if side and not fault:
            return Verdict("weyl", "skip", f"exhaustive search skipped: {rep.reason}")
        return Verdict("weyl", "fail", "closed-form checks failed")
    ok = (side and rep.minimal == [expected_min] and rep.maximal == [v])
    return Verdict("weyl", "pass" if ok else "fail",
                   f"minimal={rep.minimal} maximal={rep.maximal}", comb(ctx.n, ctx.r))


def _check_bijection(st: _State, fault: bool) -> Verdict:
    ctx, m = st.cfg.ctx, st.cfg.m
    enumerated = st.tableaux[:-1] if fault else st.tableaux
    built = sorted((build_gamma(t, m, ctx) for t in all_sequence_families(m, ctx)),
                   key=YoungTableau.sort_key)
    formula = count_A_formula(m, ctx, 1)
    round_trip = all(build_gamma(sequences_of_gamma(T, ctx, m), m, ctx) == T for T in enumerated)
    members = all(in_invariant_set(T, m, ctx, 1) for T in built)
    ok = enumerated == built and len(built) == formula and round_trip and members
    return Verdict("bijection", "pass" if ok else "fail",
                   f"|A|={len(enumerated)} formula={formula}", len(enumerated))


def _check_lemmas(st: _State, fault: bool) -> Verdict:
    ctx, m = st.cfg.ctx, st.cfg.m
    checked, skipped, failures = 0, [], []
    for k in range(1, st.cfg.kmax + 1):
        tabs = st.tableaux if k == 1 else st.degree(k)
        if isinstance(tabs, str):
            skipped.append(tabs)
            continue
        if fault and k == 1:
            T = tabs[0]
            tabs = [YoungTableau((T.rows[-1],) + T.rows[1:-1] + (T.rows[0],))] + tabs[1:]
        for T in tabs:
            try:
                res = check_structure_lemmas(T, m, ctx, k)
            except ValueError as exc:
                failures.append(f"k={k}: {exc}")
                continue
            failures += [f"k={k}: {name}" for name, ok in res.items() if not ok]
            checked += 1
    return _summarise("lemmas", checked, skipped, failures, "tableaux")


def _check_r1(st: _State, fault: bool) -> Verdict:
    ctx, m = st.cfg.ctx, st.cfg.m
    if st.cfg.kmax < 2:
        return Verdict("r1", "skip", "kmax < 2")
    checked, skipped, failures = 0, [], []
    for k in range(2, st.cfg.kmax + 1):
        tabs = st.degree(k)
        if isinstance(tabs, str):
            skipped.append(tabs)
            continue
        for T in tabs:
            first, rest = extract_degree_one(T, ctx, k)
            rows = Counter(first.rows) + Counter(rest.rows)
            if fault:
                rows[first.rows[0]] -= 1
            if rows != Counter(T.rows):
                failures.append(f"k={k}: rows do not partition")
            elif not (in_invariant_set(first, m, ctx, 1) and in_invariant_set(rest, m, ctx, k - 1)):
                failures.append(f"k={k}: factor outside the invariant set")
            checked += 1
    return _summarise("r1", checked, skipped, failures, "tableaux")


def _check_diag(st: _State, fault: bool) -> Verdict:
    ctx, m, M = st.cfg.ctx, st.cfg.m, st.M
    rows = sorted({row for T in st.tableaux for row in T.rows})
    failures = []
    for idx in rows:
        diag = diagonal_product(M, idx) + (1 if fault else 0)
        if not interval_condition(idx, m, ctx):
            failures.append(f"interval condition fails at {idx}")
        if determinant(M.submatrix(idx)) != diag:
            failures.append(f"determinant differs from diagonal product at {idx}")
    detail = f"{len(rows)} distinct rows"
    size = comb(ctx.n, ctx.r)
    if size <= SUPPORT_SCAN_BOUND:
        for idx in all_indices(ctx):
            zero = plucker_restrict(M, idx, short_circuit=False).is_zero()
            if zero == in_support_window(idx, m, ctx):
                failures.append(f"support window mismatch at {idx}")
        detail += f", support window scanned over {size} indices"
    else:
        detail += f", support scan skipped ({size} > {SUPPORT_SCAN_BOUND})"
    if failures:
        return Verdict("diag", "fail", f"{failures[0]} (+{len(failures) - 1} more)", len(rows))
    return Verdict("diag", "pass", detail, len(rows))


def _check_factorization(st: _State, fault: bool) -> Verdict:
    ctx, m = st.cfg.ctx, st.cfg.m
    F = st.F * var(1, 1) if fault else st.F
    failures = []
    for T in st.tableaux:
        try:
            factorization_certificate(T, m, ctx, st.M, F)
        except CertificateError as exc:
            failures.append(str(exc))
    gcd = common_factor_is_gcd([restriction(T, st.M) for T in st.tableaux], F)
    if not gcd:
        failures.append("common factor is not the monomial gcd")
    if failures:
        return Verdict("factorization", "fail", failures[0], len(st.tableaux))
    return Verdict("factorization", "pass",
                   f"{len(st.tableaux)} certificates, common factor is the gcd",
                   len(st.tableaux))


def _check_appendix(st: _State, fault: bool) -> Verdict:
    ctx, m = st.cfg.ctx, st.cfg.m
    cases = set()
    for T in st.tableaux:
        for j, seq in enumerate(sequences_of_gamma(T, ctx, m), start=1):
            cases.add((j, blocks_of_sequence(seq)))
    failures = []
    for i, (j, (b, tv)) in enumerate(sorted(cases)):
        ok = appendix_identity(b, tv, j, m, ctx)
        if fault and i == 0:
            ok = not ok
        if not ok:
            failures.append(f"j={j} b={b} t={tv}")
    if failures:
        return Verdict("appendix", "fail", f"identity fails for {failures[0]}", len(cases))
    return Verdict("appendix", "pass", f"{len(cases)} block structures", len(cases))


def _check_independence(st: _State, fault: bool) -> Verdict:
    cfg = st.cfg
    sysm = build_coordinates(cfg.m, cfg.ctx)
    coords = None
    if fault:
        nonconst = [p for p in sysm.coordinates() if p.variables()] or [var(1, 1)]
        coords = nonconst + nonconst[:1]
    res = independence_check(sysm, cfg.trials, cfg.seed, coordinates=coords)
    detail = f"ranks={res.ranks} expected={res.expected} seed={res.seed}"
    return Verdict("independence", "pass" if res.independent else "fail", detail, cfg.trials)


def _check_segre(st: _State, fault: bool) -> Verdict:
    cfg = st.cfg
    rep = segre_consistency(cfg.m, cfg.ctx, cfg.limit)
    basis_equal = rep.basis_equal and not fault
    ok = rep.matches and rep.injective and basis_equal
    return Verdict("segre", "pass" if ok else "fail",
                   f"matches={rep.matches} injective={rep.injective} basis={basis_equal}",
                   rep.sections)


def _check_quotient(st: _State, fault: bool) -> Verdict:
    cfg = st.cfg
    qi = identify_quotient(cfg.m, cfg.ctx)
    sections = qi.section_count + (1 if fault else 0)
    tri = check_triangularity(build_coordinates(cfg.m, cfg.ctx))
    ok = tri and sections == len(st.tableaux)
    return Verdict("quotient", "pass" if ok else "fail",
                   f"{qi.describe()}; triangular={tri}", qi.section_count)


def _summarise(name: str, checked: int, skipped: list[str], failures: list[str],
               unit: str) -> Verdict:
    if failures:
        return Verdict(name, "fail", f"{failures[0]} ({len(failures)} failures)", checked)
    detail = f"{checked} {unit}"
    if skipped:
        detail += "; skipped " + "; ".join(skipped)
    return Verdict(name, "pass", detail, checked)


_RUNNERS: dict[str, Callable[[_State, bool], Verdict]] = {
    "weyl": _check_weyl,
    "bijection": _check_bijection,
    "lemmas": _check_lemmas,
    "r1": _check_r1,
    "diag": _check_diag,
    "factorization": _check_factorization,
    "appendix": _check_appendix,
    "independence": _check_independence,
    "segre": _check_segre,
    "quotient": _check_quotient,
}


def run_verification(cfg: RunConfig) -> VerificationReport:
    """Run every check in a fixed order.

    Raises SearchLimitExceeded if the degree-one enumeration itself is over
    the node limit; higher-degree overruns become declared skips.
    """
    st = _State(cfg)
    report = VerificationReport(cfg)
    for name in CHECKS:
        t0 = time.perf_counter()
        try:
            verdict = _RUNNERS[name](st, name in cfg.faults)
        except SearchLimitExceeded as exc:
            verdict = Verdict(name, "skip", str(exc))
        except (ArithmeticError, ValueError, AssertionError) as exc:
            verdict = Verdict(name, "fail", f"{type(exc).__name__}: {exc}")
        verdict.seconds = time.perf_counter() - t0
        report.verdicts.append(verdict)
    report.counts["A_degree_1"] = len(st.tableaux)
    for k in range(2, cfg.kmax + 1):
        tabs = st.degree(k)
        if not isinstance(tabs, str):
            report.counts[f"A_degree_{k}"] = len(tabs)
    return report


def random_block_structure(rng: random.Random, max_len: int = 5,
                           max_q: int = 6) -> tuple[tuple[int, ...], tuple[int, ...], int,
                                                    ParamM, GrassmannianContext]:
    """A random (b, t, j, m, ctx) accepted by appendix_identity."""
    q = rng.randint(1, max_q)
    length = rng.randint(1, max_len)  # r - j
    j = rng.randint(1, 3)
    r = j + length
    ctx = GrassmannianContext(q * r + 1, r, q)
    m = tuple(rng.randint(1, q) for _ in range(r - 1))
    values = list(range(m[j - 1] + 1, q + 2))
    y = rng.randint(1, min(length, len(values)))
    tv = tuple(sorted(rng.sample(values, y)))
    b = tuple(sorted(rng.sample(range(1, length), y - 1))) + (length,)
    return b, tv, j, m, ctx
