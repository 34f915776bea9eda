"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 invalid input. Records go to
stdout (or ``--output``) as JSON lines, or CSV for the table commands. All
numbers are exact: integers, or fractions rendered as "a/b".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd

from sympy import isprime

from . import __version__
from .bianchi import BianchiSetup, bianchi_weight_to_elliptic, bs_bc_dim
from .conductor import (
    LocalCharData,
    PrincipalSeries,
    Special,
    Supercuspidal,
    UnramifiedPS,
    bc_level,
    bc_local_conductor,
    rep_conductor,
)
from .errors import BCDimsError, InvalidInput, UnsupportedInput
from .newspace import (
    LevelSpec,
    closed_form_corr,
    closed_form_new_omega,
    closed_form_new_trivial,
    dim_corr,
    dim_new_omega,
    dim_new_trivial,
)
from .oracle.cohen_oesterle import QuadraticChar, newspace_inversion
from .oracle.validate import SUITES, run_suite
from .quad_local import ExtKind, ImagQuadField, QuadExtClass, Splitting, is_squarefree

CSV_COLUMNS = ("disc", "N", "k", "space", "value", "integral", "formula_path")

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


def render(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {k: render(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [render(v) for v in x]
    return x


def emit(records, fmt: str, out) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(["" if r.get(c) is None else _csv_cell(render(r.get(c))) for c in CSV_COLUMNS])
        out.write(buf.getvalue())
    else:
        for r in records:
            out.write(json.dumps(render(r)) + "\n")


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def parse_int_set(text: str) -> tuple[list[int], bool]:
    """'5' -> [5]; '1-10' and '2,3,7' forms give sorted lists. Second value: was it a range?"""
    values: set[int] = set()
    ranged = False
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        body = part[1:] if part.startswith("-") else part
        if "-" in body:
            cut = part.index("-", 1 if part.startswith("-") else 0)
            lo, hi = int(part[:cut]), int(part[cut + 1:])
            if hi < lo:
                raise InvalidInput(f"empty range {part!r}")
            values.update(range(lo, hi + 1))
            ranged = True
        else:
            values.add(int(part))
    if not values:
        raise InvalidInput(f"no values in {text!r}")
    return sorted(values), ranged or len(values) > 1


# conductor ----------------------------------------------------------------
EXT_CHOICES = [k.value for k in ExtKind]


def _char(cond: int, order2: bool) -> LocalCharData:
    return LocalCharData(cond, order2 or cond == 0)


def _local_rep(p: int, rep: str, conds: list[int], order2: list[bool], sc_ext: str | None):
    if rep == "unram":
        return UnramifiedPS()
    if rep == "ps":
        if len(conds) != 2:
            raise InvalidInput("principal series needs exactly two conductors")
        return PrincipalSeries(_char(conds[0], order2[0]), _char(conds[1], order2[1]))
    if len(conds) != 1:
        raise InvalidInput(f"{rep} needs exactly one conductor")
    if rep == "special":
        return Special(_char(conds[0], order2[0]))
    if rep == "sc":
        if sc_ext is None:
            raise InvalidInput("supercuspidal needs --sc-ext")
        return Supercuspidal(QuadExtClass(ExtKind(sc_ext), p), _char(conds[0], order2[0]))
    raise InvalidInput(f"unknown representation type {rep!r}")


def _order2_mask(arg, n: int) -> list[bool]:
    if arg is None:
        return [False] * n
    if not arg:
        return [True] * n
    mask = [False] * n
    for i in arg:
        if not 1 <= i <= n:
            raise InvalidInput(f"--order2 index {i} out of range 1..{n}")
        mask[i - 1] = True
    return mask


def parse_local_spec(text: str):
    """'P:REP[:SCEXT]:CONDS' with CONDS comma separated and a trailing '*' marking order <= 2.

    Examples: '11:special:0', '7:sc:ram-pi:1', '5:ps:1*,2', '3:unram'.
    """
    parts = text.split(":")
    try:
        p = int(parts[0])
        rep = parts[1]
    except (IndexError, ValueError):
        raise InvalidInput(f"bad local spec {text!r}")
    sc_ext = None
    rest = parts[2:]
    if rep == "sc":
        if len(rest) != 2:
            raise InvalidInput(f"bad supercuspidal spec {text!r}")
        sc_ext, rest = rest[0], rest[1:]
    conds, flags = [], []
    if rest:
        for c in rest[0].split(","):
            flags.append(c.endswith("*"))
            conds.append(int(c.rstrip("*")))
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")
    return p, _local_rep(p, rep, conds, flags, sc_ext)


def cmd_conductor(args) -> list[dict]:
    if args.disc is not None:
        K = ImagQuadField.from_disc(args.disc)
        local = dict(parse_local_spec(s) for s in args.local or [])
        report = bc_level(K, local)
        return [{**report.to_json(), "formula_path": "closed-form"}]
    if args.p is None or args.splitting is None or args.rep is None:
        raise InvalidInput("need --p, --splitting and --rep (or --disc with --local)")
    p = args.p
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")
    splitting = Splitting(args.splitting)
    if splitting is Splitting.RAMIFIED and p == 2:
        raise UnsupportedInput("wild ramification unsupported")
    Kp = None
    if splitting is Splitting.RAMIFIED:
        if args.ext is None:
            raise InvalidInput("ramified prime needs --ext")
        Kp = QuadExtClass(ExtKind(args.ext), p)
        if not Kp.ramified:
            raise InvalidInput("--ext must be ramified at a ramified prime")
    elif args.ext is not None:
        raise InvalidInput("--ext is only meaningful at a ramified prime")
    conds = args.cond or []
    mask = _order2_mask(args.order2, len(conds))
    if args.rep == "unram":
        groups = [([], [])]
    elif args.rep == "ps":
        if not conds or len(conds) % 2:
            raise InvalidInput("principal series takes conductors in pairs")
        groups = [(conds[i:i + 2], mask[i:i + 2]) for i in range(0, len(conds), 2)]
    else:
        if not conds:
            raise InvalidInput("--cond is required")
        groups = [([c], [m]) for c, m in zip(conds, mask)]
    out = []
    for cs, ms in groups:
        rep = _local_rep(p, args.rep, cs, ms, args.sc_ext)
        out.append({
            "p": p,
            "splitting": splitting.value,
            "ext": Kp.kind.value if Kp else None,
            "rep": args.rep,
            "sc_ext": args.sc_ext if args.rep == "sc" else None,
            "cond": cs,
            "order2": ms,
            "qp_exponent": rep_conductor(rep),
            "exponents": [bc_local_conductor(splitting, Kp, rep)] * (2 if splitting is Splitting.SPLIT else 1),
            "formula_path": "closed-form",
        })
    return out


# dims ---------------------------------------------------------------------
def _dims_one(task):
    space, method, N, ell, k = task
    if method == "engine":
        value = {"new": lambda: dim_new_trivial(N, k),
                 "omega": lambda: dim_new_omega(N, ell, k),
                 "corr": lambda: dim_corr(N, ell, k)}[space]()
    elif method == "closed-form":
        if N == 1:
            raise InvalidInput("the closed forms only hold for N > 1; use --method engine")
        value = {"new": lambda: closed_form_new_trivial(N, k),
                 "omega": lambda: closed_form_new_omega(N, ell, k),
                 "corr": lambda: closed_form_corr(N, ell, k)}[space]()
    else:
        if space == "corr":
            raise UnsupportedInput("no independent oracle for the corr space")
        if space == "new":
            value = newspace_inversion(N, None, k)
        else:
            value = newspace_inversion(N * ell, QuadraticChar(-ell), k)
    value = Fraction(value)
    integral = value.denominator == 1
    return {
        "disc": -ell if ell is not None else None,
        "N": N,
        "k": k,
        "space": space,
        "value": int(value) if integral else value,
        "integral": integral,
        "formula_path": "oracle" if method == "oracle" else method,
    }


def _admissible(space: str, N: int, ell, k: int) -> bool:
    if not is_squarefree(N):
        return False
    if space == "new":
        return k % 2 == 0 and k >= 2
    if gcd(N, ell) != 1:
        return False
    return (k % 2 == 1 and k >= 3) if space == "omega" else (k % 2 == 0 and k >= 2)


def _map(func, tasks, jobs: int):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(func, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [func(t) for t in tasks]


def cmd_dims(args) -> list[dict]:
    space = args.space
    ell = args.ell
    if space == "new":
        if ell is not None:
            raise InvalidInput("--ell does not apply to --space new")
    else:
        if ell is None:
            raise InvalidInput(f"--space {space} needs --ell")
        if not isprime(ell) or ell == 2:
            raise InvalidInput(f"--ell {ell} must be an odd prime")
        if space == "omega" and ell % 4 != 3:
            raise InvalidInput(f"--ell {ell} must be 3 mod 4 for the omega space")
    levels, lr = parse_int_set(args.level)
    weights, wr = parse_int_set(args.weight)
    tasks = []
    for N in levels:
        for k in weights:
            if lr or wr:
                if N < 1 or not _admissible(space, N, ell, k):
                    continue
                if args.method == "closed-form" and N == 1:
                    continue
            tasks.append((space, args.method, N, ell, k))
    if not tasks:
        raise InvalidInput("no admissible (level, weight) pairs")
    records = _map(_dims_one, tasks, args.jobs)
    records.sort(key=lambda r: (ell or 0, r["N"], r["k"]))
    return records


# bianchi ------------------------------------------------------------------
def _bianchi_one(task):
    disc, N, k_given, bianchi_weight = task
    k = bianchi_weight_to_elliptic(k_given) if bianchi_weight else k_given
    setup = BianchiSetup.from_ints(disc, N, k)
    rep = bs_bc_dim(setup)
    return {
        "disc": disc,
        "N": N,
        "k": k,
        "k_given": k_given,
        "weight_convention": "bianchi" if bianchi_weight else "elliptic",
        "space": "bianchi-bc",
        "value": rep.value,
        "integral": rep.integral,
        "cm_contamination": not rep.integral,
        "warning": rep.warning,
        "components": {"old_part": rep.old_part, "corr_or_omega_part": rep.corr_or_omega_part},
        "parity_used": "even" if rep.parity_used > 0 else "odd",
        "formula_path": "engine",
    }


def cmd_bianchi(args) -> list[dict]:
    ImagQuadField.from_disc(args.disc)  # validates before any sweep
    levels, lr = parse_int_set(args.level)
    weights, wr = parse_int_set(args.weight)
    tasks = []
    for N in levels:
        for k in weights:
            if (lr or wr) and (N < 1 or not is_squarefree(N) or gcd(N, args.disc) != 1
                               or (k if args.bianchi_weight else k - 2) < 0):
                continue
            tasks.append((args.disc, N, k, args.bianchi_weight))
    if not tasks:
        raise InvalidInput("no admissible (level, weight) pairs")
    records = _map(_bianchi_one, tasks, args.jobs)
    records.sort(key=lambda r: (-r["disc"], r["N"], r["k"]))
    return records


# validate -----------------------------------------------------------------
def cmd_validate(args):
    results = run_suite(args.suite, args.max_level, args.max_weight, args.jobs)
    return [r.to_json() for r in results], all(r.passed for r in results)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bcdims", description="Base change conductors and Bianchi base-change dimensions.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=False, jobs=True):
        p.add_argument("--output", help="write records to this file instead of stdout")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        if jobs:
            p.add_argument("--jobs", type=int, default=1)

    c = sub.add_parser("conductor", help="conductor exponents of local base change")
    c.add_argument("--p", type=int)
    c.add_argument("--splitting", choices=[s.value for s in Splitting])
    c.add_argument("--ext", choices=EXT_CHOICES, help="K_p at a ramified prime")
    c.add_argument("--rep", choices=("ps", "special", "sc", "unram"))
    c.add_argument("--cond", type=int, nargs="+")
    c.add_argument("--order2", type=int, nargs="*",
                   help="characters (1-based positions in --cond) whose unit restriction has order <= 2; no value means all")
    c.add_argument("--sc-ext", choices=EXT_CHOICES, help="the quadratic extension E of a supercuspidal")
    c.add_argument("--disc", type=int, help="global mode: discriminant of K")
    c.add_argument("--local", action="append", metavar="SPEC",
                   help="global mode: local type 'P:REP[:SCEXT]:CONDS', e.g. 7:sc:ram-pi:1 or 5:ps:1*,2")
    common(c, jobs=False)
    c.set_defaults(func=cmd_conductor)

    d = sub.add_parser("dims", help="dimensions of the elliptic newform spaces")
    d.add_argument("--space", choices=("new", "omega", "corr"), required=True)
    d.add_argument("--level", required=True, help="N, a range a-b, or a comma list")
    d.add_argument("--ell", type=int)
    d.add_argument("--weight", required=True, help="elliptic weight k, a range, or a list")
    d.add_argument("--method", choices=("engine", "closed-form", "oracle"), default="engine")
    common(d, fmt=True)
    d.set_defaults(func=cmd_dims)

    b = sub.add_parser("bianchi", help="dimension of the base-change subspace of Bianchi newforms")
    b.add_argument("--disc", type=int, required=True, help="-ell with ell prime, ell = 3 mod 4")
    b.add_argument("--level", required=True)
    b.add_argument("--weight", required=True)
    b.add_argument("--bianchi-weight", action="store_true", help="--weight is the Bianchi weight (elliptic weight minus 2)")
    common(b, fmt=True)
    b.set_defaults(func=cmd_bianchi)

    v = sub.add_parser("validate", help="run the cross-validation suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-level", type=int, default=100)
    v.add_argument("--max-weight", type=int, default=20)
    common(v)
    v.set_defaults(func=cmd_validate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = open(args.output, "w") if getattr(args, "output", None) else sys.stdout
    try:
        try:
            result = args.func(args)
        except (BCDimsError, ValueError) as e:
            kind = "unsupported" if isinstance(e, UnsupportedInput) else "invalid-input"
            out.write(json.dumps({"error": str(e), "kind": kind}) + "\n")
            return EXIT_INVALID
        if args.command == "validate":
            records, ok = result
            emit(records, "json", out)
            return EXIT_OK if ok else EXIT_FAILED
        emit(result, getattr(args, "format", "json"), out)
        return EXIT_OK
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
