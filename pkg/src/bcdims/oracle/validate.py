"""Cross-validation sweeps: engine against literal closed forms, Cohen-Oesterle,
character tables and brute-force conductors.

Each suite returns a list of :class:`CheckResult`, one per named check, each
summarising every case it ran.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from sympy import primerange

from ..bianchi import BianchiSetup, bs_bc_dim
from ..conductor import bc_char_conductor
from ..errors import BCDimsError
from ..newspace import (
    LevelSpec,
    closed_form_corr,
    closed_form_new_omega,
    closed_form_new_trivial,
    dim_corr,
    dim_new_omega,
    dim_new_trivial,
)
from ..quad_local import ExtKind, QuadExtClass, is_squarefree, prime_divisors, rel_data
from ..repmult import Parity, ps_omega, steinberg_minus_trivial
from .chartable import Family, GL2CharTable, char_table_repdata
from .cohen_oesterle import QuadraticChar, newspace_inversion
from .units import enumerate_bc_conductors

SUITES = ("closed-form", "oracle", "chartable", "conductor")
BIANCHI_ELLS = tuple(p for p in primerange(3, 48) if p % 4 == 3)
CHARTABLE_PRIMES = (3, 5, 7, 11, 13)
MAX_FAILURE_EXAMPLES = 5


@dataclass
class CheckResult:
    suite: str
    check: str
    cases: int = 0
    failures: list = field(default_factory=list)
    n_failed: int = 0

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.n_failed == 0

    def record(self, ok: bool, case) -> None:
        self.cases += 1
        if not ok:
            self.n_failed += 1
            if len(self.failures) < MAX_FAILURE_EXAMPLES:
                self.failures.append(case)

    def merge(self, other: CheckResult) -> None:
        self.cases += other.cases
        self.n_failed += other.n_failed
        room = MAX_FAILURE_EXAMPLES - len(self.failures)
        self.failures.extend(other.failures[:room])

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.check,
            "cases": self.cases,
            "failed": self.n_failed,
            "pass": self.passed,
            "failure_examples": [_jsonable(c) for c in self.failures],
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def squarefree_levels(lo: int, hi: int, max_prime: int = 50) -> list[int]:
    return [n for n in range(lo, hi + 1) if is_squarefree(n) and all(p <= max_prime for p in prime_divisors(n))]


def _gather(results: Iterable[list[CheckResult]]) -> list[CheckResult]:
    merged: dict[str, CheckResult] = {}
    for chunk in results:
        for r in chunk:
            if r.check in merged:
                merged[r.check].merge(r)
            else:
                merged[r.check] = r
    return list(merged.values())


def _run_chunks(func: Callable, chunks: list, jobs: int) -> list[CheckResult]:
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(func, chunks))
    else:
        parts = [func(c) for c in chunks]
    return _gather(parts)


# closed-form -----------------------------------------------------------------
def _closed_form_chunk(args) -> list[CheckResult]:
    levels, max_weight = args
    s = "closed-form"
    eq_new, eq_om, eq_corr = (CheckResult(s, f"engine-equals-closed-form:{x}") for x in ("new", "omega", "corr"))
    integral = CheckResult(s, "nonnegative-integer")
    even = CheckResult(s, "even-twisted-part")
    bianchi = CheckResult(s, "bianchi-integral")
    for N in levels:
        L = LevelSpec(N)
        for k in range(2, max_weight + 1):
            if k % 2 == 0:
                cf = closed_form_new_trivial(L, k)
                try:
                    v = dim_new_trivial(L, k)
                    integral.record(True, None)
                except BCDimsError as e:
                    v = None
                    integral.record(False, {"space": "new", "N": N, "k": k, "error": str(e)})
                eq_new.record(v == cf, {"N": N, "k": k, "engine": v, "closed_form": cf})
            for ell in BIANCHI_ELLS:
                if N % ell == 0 or (k % 2 == 1 and k < 3):
                    continue
                space = "corr" if k % 2 == 0 else "omega"
                engine = dim_corr if space == "corr" else dim_new_omega
                closed = closed_form_corr if space == "corr" else closed_form_new_omega
                case = {"space": space, "N": N, "ell": ell, "k": k}
                cf = closed(L, ell, k)
                try:
                    v = engine(L, ell, k)
                    integral.record(True, None)
                except BCDimsError as e:
                    v = None
                    integral.record(False, {**case, "error": str(e)})
                (eq_corr if space == "corr" else eq_om).record(v == cf, {**case, "engine": v, "closed_form": cf})
                even.record(v is not None and v % 2 == 0, {**case, "value": v})
                try:
                    rep = bs_bc_dim(BianchiSetup.from_ints(-ell, N, k))
                    bianchi.record(rep.integral, {**case, "value": rep.value})
                except BCDimsError as e:
                    bianchi.record(False, {**case, "error": str(e)})
    return [eq_new, eq_om, eq_corr, integral, even, bianchi]


def suite_closed_form(max_level: int = 100, max_weight: int = 20, jobs: int = 1) -> list[CheckResult]:
    """Engine = closed form, integrality, evenness and Bianchi integrality over square-free 1 < N <= max_level."""
    levels = squarefree_levels(2, max_level)
    chunks = [(levels[i::max(jobs, 1) * 4], max_weight) for i in range(max(jobs, 1) * 4)]
    chunks = [c for c in chunks if c[0]]
    return _run_chunks(_closed_form_chunk, chunks, jobs)


# oracle ----------------------------------------------------------------------
NEBENTYPUS_ELLS = (3, 7, 11, 23)


def _oracle_trivial_chunk(args) -> list[CheckResult]:
    levels, max_weight = args
    r = CheckResult("oracle", "cohen-oesterle-newspace:trivial")
    for N in levels:
        for k in range(2, max_weight + 1, 2):
            a, b = newspace_inversion(N, None, k), dim_new_trivial(N, k)
            r.record(a == b, {"N": N, "k": k, "oracle": a, "engine": b})
    return [r]


def _oracle_omega_chunk(args) -> list[CheckResult]:
    levels, max_weight = args
    r = CheckResult("oracle", "cohen-oesterle-newspace:omega")
    for N in levels:
        for ell in NEBENTYPUS_ELLS:
            if N % ell == 0:
                continue
            chi = QuadraticChar(-ell)
            for k in range(3, max_weight + 1, 2):
                a, b = newspace_inversion(N * ell, chi, k), dim_new_omega(N, ell, k)
                r.record(a == b, {"N": N, "ell": ell, "k": k, "oracle": a, "engine": b})
    return [r]


def suite_oracle(max_level: int = 100, max_weight: int = 20, jobs: int = 1) -> list[CheckResult]:
    """Trivial character: square-free N <= max_level, even k <= max_weight.
    omega_K: ell in (3, 7, 11, 23), square-free N <= min(30, max_level), odd k <= min(15, max_weight)."""
    width = max(jobs, 1) * 4
    lv = squarefree_levels(1, max_level, max_prime=max_level)
    lw = squarefree_levels(1, min(30, max_level), max_prime=30)
    chunks1 = [(lv[i::width], max_weight) for i in range(width) if lv[i::width]]
    chunks2 = [(lw[i::width], min(15, max_weight)) for i in range(width) if lw[i::width]]
    return _run_chunks(_oracle_trivial_chunk, chunks1, jobs) + _run_chunks(_oracle_omega_chunk, chunks2, jobs)


# chartable -------------------------------------------------------------------
def _chartable_prime(p: int) -> list[CheckResult]:
    s = "chartable"
    eq = CheckResult(s, "repdata-equals-library")
    cusp = CheckResult(s, "cuspidal-no-invariants")
    t = GL2CharTable(p)
    got = char_table_repdata(p, Family.STEINBERG_MINUS_TRIVIAL)
    want = steinberg_minus_trivial(p)
    eq.record(got == want, {"p": p, "family": "st-minus-trivial", "table": got.as_tuple(), "library": want.as_tuple()})
    if p % 4 == 3:
        got = char_table_repdata(p, Family.PRINCIPAL_SERIES_OMEGA)
        want = ps_omega(p)
        eq.record(got == want, {"p": p, "family": "ps-omega", "table": got.as_tuple(), "library": want.as_tuple()})
    for key, chi in t.irreducibles().items():
        if key[0] != "X":
            continue
        fp = t.fingerprint(chi, Parity(t.central_sign(chi)))
        cusp.record(fp.dim_u == 0 and fp.dim_g == 0, {"p": p, "theta": key[1], "dim_u": fp.dim_u, "dim_g": fp.dim_g})
    return [eq, cusp]


def suite_chartable(jobs: int = 1, primes=CHARTABLE_PRIMES) -> list[CheckResult]:
    return _run_chunks(_chartable_prime, list(primes), jobs)


# conductor -------------------------------------------------------------------
def _conductor_prime(p: int) -> list[CheckResult]:
    r = CheckResult("conductor", "bc-char-conductor-brute-force")
    for kind in ExtKind:
        ext = rel_data(QuadExtClass(kind, p))
        for c in enumerate_bc_conductors(p, kind, 3):
            got = bc_char_conductor(ext, c.chi)
            r.record(got == c.bc_cond, {"p": p, "ext": kind.value, "char_index": c.index,
                                        "cond": c.chi.cond, "formula": got, "brute_force": c.bc_cond})
    return [r]


def suite_conductor(jobs: int = 1, primes=(3, 5, 7)) -> list[CheckResult]:
    return _run_chunks(_conductor_prime, list(primes), jobs)


def run_suite(name: str, max_level: int = 100, max_weight: int = 20, jobs: int = 1) -> list[CheckResult]:
    if name == "all":
        out = []
        for s in SUITES:
            out += run_suite(s, max_level, max_weight, jobs)
        return out
    if name == "closed-form":
        return suite_closed_form(max_level, max_weight, jobs)
    if name == "oracle":
        return suite_oracle(max_level, max_weight, jobs)
    if name == "chartable":
        return suite_chartable(jobs)
    if name == "conductor":
        return suite_conductor(jobs)
    raise ValueError(f"unknown suite {name!r}")
