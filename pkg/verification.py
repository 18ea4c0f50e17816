"""Statement checkers behind ``verify`` and ``sweep``.

Each checker takes ``(n, settings)`` and returns the records for that n.
Checkers are module-level so the process pool can pickle them.
"""
from __future__ import annotations

import logging
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from algebra.poly import Poly
from autgroup.groups import AutResult, conjugate_group
from autgroup.oracles import expected_aut, in_scope, w_expected
from autgroup.search import DEFAULT_BRUTE_HEIGHT, aut_brute_force, aut_search, is_automorphism
from errors import FactorizationError, OutOfScopeError, UnsupportedWeightError
from families.chebyshev import SCALING, factor_u_tilde, factor_v_tilde, t_form, tilde_roots, u_form, u_tilde, v_tilde
from families.trig_minpoly import (
    constant_coeff_formula,
    is_reciprocal,
    psi,
    psi_one_bound_holds,
    psi_one_record,
    trace_stats,
)
from form_sources import build
from invariants.lattice import w_f
from invariants.report import c_f
from settings import Settings, get_settings
from utils.fuzzy_search import suggest
from utils.json_io import format_rational, load_json, parse_rational
from utils.pool import ordered_map

logger = logging.getLogger(__name__)

RECIPROCAL_INDICES = frozenset({3, 24})
TABLE_REL_TOL = 1e-4

Task = Tuple[int, Settings]


@dataclass(frozen=True)
class VerificationRecord:
    statement: str
    n: int
    passed: bool
    subject: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)
    info: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError(f"{self.statement} n={self.n}: a failed record needs a witness")

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"statement": self.statement, "n": self.n, "verdict": self.verdict}
        if self.subject:
            out["subject"] = self.subject
        if self.witness:
            out["witness"] = self.witness
        if self.info:
            out["info"] = self.info
        return out

    def __str__(self) -> str:
        head = f"{self.statement:<11} n={self.n:<6} {self.subject:<12} {self.verdict.upper()}"
        if self.witness:
            detail = ", ".join(f"{k}={v}" for k, v in self.witness.items())
            return f"{head}  {detail}"
        return head


def _record(statement: str, n: int, witness: Dict[str, Any], subject: str = "", **info: Any) -> VerificationRecord:
    return VerificationRecord(statement, n, not witness, subject, witness, info)


# -----------------------------
# Automorphism statements
# -----------------------------
def _weight_witness(result: AutResult, family: str, n: int) -> Dict[str, Any]:
    expected = w_expected(family, n)  # type: ignore[arg-type]
    try:
        found = w_f(result.aut)
    except UnsupportedWeightError as e:
        return {"W": str(e)}
    if found != expected:
        return {"W": {"expected": format_rational(expected), "found": format_rational(found)}}
    return {}


def _family_aut_record(statement: str, family: str, n: int, settings: Settings) -> VerificationRecord:
    source = build(family, n, settings.precision)
    result = aut_search(
        source.form,
        precision=settings.precision,
        denom_bound=settings.denom_bound,
        roots=source.roots,
        galois=source.galois,
    )
    expected = expected_aut(family, n)  # type: ignore[arg-type]
    witness: Dict[str, Any] = {}
    if not expected.matches(result):
        witness["expected"] = expected.to_json()
        witness["found"] = result.to_json()
    witness.update(_weight_witness(result, family, n))
    if source.form.degree <= 4:
        brute = aut_brute_force(source.form, DEFAULT_BRUTE_HEIGHT)
        if not brute.same_groups(result):
            witness["brute_force"] = brute.to_json()
    cls, abs_cls = result.classes
    return _record(statement, n, witness, f"{family}_{n}", **{"class": cls.value, "abs_class": abs_cls.value})


def check_theorem1(task: Task) -> List[VerificationRecord]:
    n, settings = task
    return [_family_aut_record("theorem1", "psi", n, settings)]


def check_corollary1(task: Task) -> List[VerificationRecord]:
    n, settings = task
    return [_family_aut_record("corollary1", "pi", n, settings)]


def check_theorem2(task: Task) -> List[VerificationRecord]:
    """Aut T_n and Aut U_n by conjugating the tilde-form groups with S = diag(2, 1)."""
    n, settings = task
    out = []
    cases = (
        ("T", v_tilde(n), tilde_roots("vtilde", n, settings.precision), t_form(n)),
        ("U", u_tilde(n + 1), tilde_roots("utilde", n + 1, settings.precision), u_form(n)),
    )
    for family, tilde, roots, target in cases:
        found = aut_search(tilde, precision=settings.precision, denom_bound=settings.denom_bound, roots=roots)
        conj = AutResult(
            aut=conjugate_group(found.aut, SCALING),
            aut_abs=conjugate_group(found.aut_abs, SCALING),
            method="conjugated",
            form=target,
        )
        witness: Dict[str, Any] = {}
        bad = [g for g in conj.aut if not is_automorphism(target, g)]
        bad += [g for g in conj.aut_abs if not is_automorphism(target, g, allow_sign=True)]
        if bad:
            witness["not_automorphisms"] = [g.to_json() for g in bad]
        expected = expected_aut(family, n)  # type: ignore[arg-type]
        if not expected.matches(conj):
            witness["expected"] = expected.to_json()
            witness["found"] = conj.to_json()
        witness.update(_weight_witness(conj, family, n))
        cls, abs_cls = conj.classes
        out.append(_record("theorem2", n, witness, f"{family}_{n}", **{"class": cls.value, "abs_class": abs_cls.value}))
    return out


# -----------------------------
# Polynomial identities
# -----------------------------
def _reflect(p: Poly) -> Poly:
    """p(-x)."""
    return Poly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)))


def check_lemma32(task: Task) -> List[VerificationRecord]:
    n, _ = task
    p = psi(n)
    if n % 4 == 0:
        odd = [i for i in range(1, len(p.coeffs), 2) if p.coeffs[i]]
        return [_record("lemma32", n, {"odd_terms": odd} if odd else {}, f"psi_{n} even")]
    d = p.degree
    image = _reflect(psi(2 * n)) * (-1) ** d
    witness = {} if image == p else {"psi_n": str(p), "(-1)^d psi_2n(-x)": str(image)}
    return [_record("lemma32", n, witness, f"psi_{n} vs psi_{2 * n}")]


def check_eq9(task: Task) -> List[VerificationRecord]:
    n, _ = task
    formula = constant_coeff_formula(n)
    actual = abs(psi(n).coeff(0))
    witness = {} if formula == actual else {"formula": formula, "|psi(0)|": actual}
    return [_record("eq9", n, witness, f"psi_{n}")]


def _factorization_record(statement: str, n: int, factor) -> VerificationRecord:
    try:
        fac = factor(n)
    except FactorizationError as e:
        return _record(statement, n, {"error": str(e)})
    return _record(statement, n, {}, str(fac))


def check_eq10(task: Task) -> List[VerificationRecord]:
    return [_factorization_record("eq10", task[0], factor_u_tilde)]


def check_eq11(task: Task) -> List[VerificationRecord]:
    return [_factorization_record("eq11", task[0], factor_v_tilde)]


def check_reciprocal(task: Task) -> List[VerificationRecord]:
    n, _ = task
    p = psi(n)
    reciprocal = p.coeff(0) != 0 and is_reciprocal(p)
    expected = n in RECIPROCAL_INDICES
    witness: Dict[str, Any] = {} if reciprocal == expected else {"reciprocal": reciprocal, "expected": expected}
    tr, norm, rtr = trace_stats(n)
    # a reciprocal monic Psi_n has |trace| = |norm * sum of reciprocal roots|
    traces_differ = abs(tr) != abs(rtr)
    if traces_differ and reciprocal:
        witness["traces"] = {"tr": tr, "rtr": rtr}
    return [
        _record(
            "reciprocal",
            n,
            witness,
            f"psi_{n}",
            reciprocal=reciprocal,
            tr=tr,
            norm=norm,
            rtr=rtr,
            traces_differ=traces_differ,
        )
    ]


def check_psi1bound(task: Task) -> List[VerificationRecord]:
    n, _ = task
    if psi_one_bound_holds(n):
        return [_record("psi1bound", n, {})]
    return [_record("psi1bound", n, psi_one_record(n))]


# -----------------------------
# Invariant tables
# -----------------------------
TABLES: Dict[str, Tuple[str, str]] = {"cos-sin": ("psi", "pi"), "chebyshev": ("T", "U")}


@lru_cache(maxsize=4)
def _invariant_tables(data_dir: str) -> Dict[str, Any]:
    return load_json(os.path.join(data_dir, "invariant_tables.json"))


def table_rows(which: str, data_dir: str) -> List[Dict[str, Any]]:
    if which not in TABLES:
        raise OutOfScopeError(f"unknown table {which!r}; expected one of {', '.join(TABLES)}")
    return list(_invariant_tables(data_dir)[which]["rows"])


def table_cell(family: str, n: int, settings: Settings) -> Dict[str, Any]:
    """Recompute W, A and C for one table cell."""
    source = build(family, n, settings.precision)
    aut = None
    if source.form.degree >= 3:
        aut = aut_search(
            source.form,
            precision=settings.precision,
            denom_bound=settings.denom_bound,
            roots=source.roots,
            galois=source.galois,
        )
    report = c_f(
        source.form,
        family=family,
        aut=aut,
        roots=source.roots,
        rel_tol=settings.tol,
        precision=settings.precision,
        denom_bound=settings.denom_bound,
    )
    return {"W": report.W, "A": report.A, "C": report.C, "divergent": report.divergent}


def _rel_delta(found: Optional[float], ref: Optional[float]) -> Optional[float]:
    if found is None or ref is None:
        return None
    return abs(found - ref) / abs(ref)


def compare_cell(found: Dict[str, Any], ref: Dict[str, Any]) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    """(deltas, witness) for one recomputed cell against its reference values."""
    deltas: Dict[str, Any] = {}
    witness: Dict[str, Any] = {}
    ref_w = None if ref.get("W") is None else parse_rational(ref["W"])
    if ref_w != found["W"]:
        witness["W"] = {"expected": ref.get("W"), "found": None if found["W"] is None else format_rational(found["W"])}
    for key in ("A", "C"):
        ref_v, got = ref.get(key), found[key]
        if (ref_v is None) != (got is None):
            witness[key] = {"expected": ref_v, "found": got}
            continue
        delta = _rel_delta(got, ref_v)
        deltas[key] = delta
        if delta is not None and delta > TABLE_REL_TOL:
            witness[key] = {"expected": ref_v, "found": got, "rel_delta": delta}
    return deltas, witness


def check_tables(task: Task) -> List[VerificationRecord]:
    n, settings = task
    out = []
    for which, families in TABLES.items():
        for row in table_rows(which, settings.data_dir):
            if row["n"] != n:
                continue
            for family in families:
                found = table_cell(family, n, settings)
                deltas, witness = compare_cell(found, row[family])
                out.append(_record("tables", n, witness, f"{family}_{n}", table=which, deltas=deltas))
    return out


def _has_table_row(n: int) -> bool:
    data_dir = get_settings().data_dir
    return any(row["n"] == n for which in TABLES for row in table_rows(which, data_dir))


# -----------------------------
# Statement registry
# -----------------------------
@dataclass(frozen=True)
class Statement:
    id: str
    check: Callable[[Task], List[VerificationRecord]]
    lo: int
    hi: int
    summary: str
    applies: Callable[[int], bool] = field(default=lambda n: True, compare=False)
    finite_sweep: bool = False


STATEMENTS: Dict[str, Statement] = {
    s.id: s
    for s in (
        Statement("theorem1", check_theorem1, 1, 120, "Aut Psi_n against the cos-table", lambda n: in_scope("psi", n)),
        Statement("corollary1", check_corollary1, 1, 120, "Aut Pi_n against the sin-table", lambda n: in_scope("pi", n)),
        Statement("theorem2", check_theorem2, 3, 40, "Aut T_n and Aut U_n by tilde-form conjugation"),
        Statement(
            "lemma32",
            check_lemma32,
            3,
            300,
            "parity identities of Psi_n",
            lambda n: n % 2 == 1 or (n % 4 == 0 and n >= 8),
            finite_sweep=True,
        ),
        Statement("eq9", check_eq9, 3, 300, "constant coefficient formula", finite_sweep=True),
        Statement("eq10", check_eq10, 1, 100, "factorization of U~_n", finite_sweep=True),
        Statement("eq11", check_eq11, 1, 100, "factorization of V~_n", finite_sweep=True),
        Statement("reciprocal", check_reciprocal, 3, 745, "Psi_n reciprocal only at n = 3, 24", finite_sweep=True),
        Statement("psi1bound", check_psi1bound, 16, 14335, "|Psi_n(1)| < 2^deg", finite_sweep=True),
        Statement("tables", check_tables, 3, 17, "invariant tables within 1e-4", _has_table_row),
    )
}


def get_statement(statement_id: str) -> Statement:
    stmt = STATEMENTS.get(statement_id)
    if stmt is None:
        hint = suggest(statement_id, STATEMENTS)
        extra = f" (did you mean: {', '.join(hint)}?)" if hint else ""
        raise OutOfScopeError(f"unknown statement {statement_id!r}{extra}")
    return stmt


def statement_range(stmt: Statement, lo: Optional[int] = None, hi: Optional[int] = None) -> Tuple[int, int]:
    """The [lo, hi] a run covers: explicit bounds as given, defaults otherwise.

    ``stmt.lo`` is the first n the statement is defined for; ``stmt.hi`` only
    ends the default range.
    """
    lo = stmt.lo if lo is None else lo
    hi = stmt.hi if hi is None else hi
    if lo < stmt.lo:
        raise OutOfScopeError(f"{stmt.id} starts at n = {stmt.lo}, got --min {lo}")
    if hi < lo:
        raise OutOfScopeError(f"{stmt.id}: empty range [{lo}, {hi}]")
    if hi > stmt.hi:
        logger.info("verify %s: past the default range, up to n = %d", stmt.id, hi)
    return lo, hi


def run_statement(
    statement_id: str,
    settings: Settings,
    *,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
    progress: bool = False,
) -> Iterator[VerificationRecord]:
    """Yield the records of one statement over [lo, hi] in increasing n."""
    stmt = get_statement(statement_id)
    lo, hi = statement_range(stmt, lo, hi)
    yield from _run(stmt, settings, lo, hi, progress)


def _run(stmt: Statement, settings: Settings, lo: int, hi: int, progress: bool) -> Iterator[VerificationRecord]:
    ns = [n for n in range(lo, hi + 1) if stmt.applies(n)]
    logger.info("verify %s: n in [%d, %d], %d cases, %d workers", stmt.id, lo, hi, len(ns), settings.jobs)
    tasks = [(n, settings) for n in ns]
    fails = 0
    for records in ordered_map(stmt.check, tasks, jobs=settings.jobs, desc=stmt.id, progress=progress):
        for rec in records:
            if not rec.passed:
                fails += 1
                logger.warning("%s failed at n = %d (%s)", rec.statement, rec.n, rec.subject)
            yield rec
    logger.info("verify %s: done, %d failures", stmt.id, fails)


def run_many(
    statement_ids: Iterable[str],
    settings: Settings,
    *,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
    progress: bool = False,
) -> Iterator[VerificationRecord]:
    """Statements in turn over the same explicit bounds; every range is checked before the first record."""
    plan = []
    for sid in statement_ids:
        stmt = get_statement(sid)
        plan.append((stmt, *statement_range(stmt, lo, hi)))
    return _chain(plan, settings, progress)


def _chain(plan, settings: Settings, progress: bool) -> Iterator[VerificationRecord]:
    for stmt, s_lo, s_hi in plan:
        yield from _run(stmt, settings, s_lo, s_hi, progress)


def summarize(records: Iterable[VerificationRecord]) -> Dict[str, Dict[str, int]]:
    counts: Dict[str, Counter] = {}
    for rec in records:
        counts.setdefault(rec.statement, Counter())[rec.verdict] += 1
    return {sid: {"pass": c["pass"], "fail": c["fail"]} for sid, c in counts.items()}
