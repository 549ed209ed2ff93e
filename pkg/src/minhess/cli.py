"""
Command-line interface.

    minhess poincare --n 5 --hess 2,4,5,5,5
    minhess components --n 8 --hess 2,2,3,5,6,6,7,8
    minhess gkm --n 3 --hess 2,3,3 --format dot
    minhess check --n 4 --all-h
    minhess sweep --n 5 --out report.json

Exit status: 0 on success, 1 when a check fails (the witness goes to stdout),
2 on usage errors such as an invalid Hessenberg function or an ``n`` past the
enumeration guard.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import betti, cohom, components, gkm
from .hess import HessFn, InvalidHessenbergFunction, all_hessenberg_functions
from .poly import UniPoly
from .symgroup import MAX_ENUM_N, EnumerationGuardError, format_perm

COMMANDS = (
    "poincare",
    "euler",
    "dimension",
    "fixed-points",
    "components",
    "gkm",
    "gkm-dim",
    "cohomology",
    "check",
    "sweep",
)
DEFAULT_SEED = 20240101
RANDOM_SAMPLE = 50
# exhaustive enumeration of h stops here; larger n is sampled
EXHAUSTIVE_MAX_N = 6
QUOTIENT_MAX_N = 5
IDEAL_MAX_N = 4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    h: HessFn | None = None
    format: str = "text"
    oracle: bool = False
    degree_cap: int = gkm.DEFAULT_DEGREE_CAP
    seed: int = DEFAULT_SEED
    all_h: bool = False
    keep_going: bool = False
    out: str | None = None
    degree: int = 0
    show_q: bool = False
    hilbert: bool = False
    table: bool = False
    tanisaki: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minhess",
        description="Invariants of minimal-nilpotent Hessenberg varieties in type A.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--hess", help="comma-separated values, e.g. 2,4,5,5,5")
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
        p.add_argument("--degree-cap", type=int, default=gkm.DEFAULT_DEGREE_CAP)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--all-h", action="store_true")
        p.add_argument("--keep-going", action="store_true")
        p.add_argument("--out")
        if name == "poincare":
            p.add_argument("--q", dest="show_q", action="store_true", help="print q_H(t) instead")
        if name == "gkm-dim":
            p.add_argument("--degree", type=int, default=0)
        if name == "cohomology":
            p.add_argument("--hilbert", action="store_true")
            p.add_argument("--multiplication-table", dest="table", action="store_true")
            p.add_argument("--tanisaki", action="store_true")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.n < 2:
        raise UsageError(f"--n must be at least 2, got {ns.n}")
    h = None
    if ns.hess is not None:
        try:
            h = HessFn.parse(ns.hess)
        except InvalidHessenbergFunction as exc:
            raise UsageError(f"invalid Hessenberg function: {exc}") from None
        if h.n != ns.n:
            raise UsageError(f"--hess has {h.n} values but --n is {ns.n}")
    multi = ns.command == "sweep" or (ns.command == "check" and ns.all_h)
    if h is None and not multi:
        raise UsageError(f"{ns.command} needs --hess")
    if ns.format == "dot" and ns.command != "gkm":
        raise UsageError("--format dot is only valid for gkm")
    return RunConfig(
        command=ns.command,
        n=ns.n,
        h=h,
        format=ns.format,
        oracle=ns.oracle,
        degree_cap=ns.degree_cap,
        seed=ns.seed,
        all_h=ns.all_h,
        keep_going=ns.keep_going,
        out=ns.out,
        degree=getattr(ns, "degree", 0),
        show_q=getattr(ns, "show_q", False),
        hilbert=getattr(ns, "hilbert", False),
        table=getattr(ns, "table", False),
        tanisaki=getattr(ns, "tanisaki", False),
    )


# -- checks ---------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "ok": self.ok, "detail": self.detail}


def run_checks(h: HessFn) -> list[CheckResult]:
    """Every formula/oracle pair applicable at this ``n``."""
    n = h.n
    out = []

    def add(name: str, fast, slow) -> None:
        ok = fast == slow
        out.append(CheckResult(name, ok, "" if ok else f"formula {fast} != oracle {slow}"))

    P = betti.poincare(h)
    add("poincare", str(P), str(betti.poincare_bruteforce(h)))
    fixed = betti.fixed_points(h)
    add("fixed-points", fixed.perms, betti.fixed_points_by_roots(h).perms)
    add("euler", betti.euler_number(h), len(fixed))
    add("euler-P(1)", betti.euler_number(h), P(1))
    add("dimension", betti.dimension(h), P.degree() // 2)
    comps = {c.word for c in components.components(h)}
    add(
        "components",
        sorted(format_perm(w) for w in comps),
        sorted(format_perm(w) for w in components.components_bruteforce(h)),
    )
    rep = betti.structural_checks(h)
    out.append(CheckResult("structural", rep.ok, "; ".join(rep.witnesses)))
    if n <= QUOTIENT_MAX_N:
        add("quotient-hilbert", str(cohom.quotient_ring(h).hilbert_series()), str(P))
    if n <= IDEAL_MAX_N:
        ideal = cohom.ideal_property_check(h)
        detail = ""
        if ideal.witness:
            detail = "witness " + " / ".join(format_perm(w) for w in ideal.witness)
        out.append(CheckResult("ideal", ideal.ok, detail))
    return out


def hessenberg_functions_for(n: int, seed: int) -> list[HessFn]:
    """All h for small ``n``, a seeded sample of 50 beyond that; lexicographic."""
    if n > MAX_ENUM_N:
        raise EnumerationGuardError(f"n={n} exceeds the enumeration guard {MAX_ENUM_N}")
    hs = all_hessenberg_functions(n)
    if n > EXHAUSTIVE_MAX_N and len(hs) > RANDOM_SAMPLE:
        hs = random.Random(seed).sample(hs, RANDOM_SAMPLE)
    return sorted(hs, key=lambda h: h.values)


def _sweep(cfg: RunConfig, emit: Callable[[str], None]) -> tuple[int, dict]:
    hs = hessenberg_functions_for(cfg.n, cfg.seed) if cfg.h is None else [cfg.h]
    report = {
        "n": cfg.n,
        "count": len(hs),
        "exhaustive": cfg.h is None and cfg.n <= EXHAUSTIVE_MAX_N,
        "seed": cfg.seed,
        "results": [],
    }
    failed = False
    for h in hs:
        results = run_checks(h)
        ok = all(r.ok for r in results)
        report["results"].append(
            {"h": list(h.values), "ok": ok, "checks": [r.to_json() for r in results]}
        )
        if not ok:
            failed = True
            for r in results:
                if not r.ok:
                    emit(f"FAIL h={h} {r.name}: {r.detail}")
            if not cfg.keep_going:
                break
    report["ok"] = not failed
    return (1 if failed else 0), report


# -- commands -------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _poly_json(p: UniPoly) -> list:
    return p.to_json()


def cmd_poincare(cfg: RunConfig, emit) -> int:
    h = cfg.h
    P = betti.poincare(h)
    q = betti.q_poly(h)
    status = 0
    if cfg.oracle:
        B = betti.poincare_bruteforce(h)
        if B != P:
            emit(f"FAIL formula {P} != oracle {B}")
            status = 1
    if cfg.format == "json":
        emit(
            _dump(
                {
                    "n": cfg.n,
                    "h": list(h.values),
                    "poincare": _poly_json(P),
                    "q": _poly_json(q),
                    "euler": betti.euler_number(h),
                    "dimension": betti.dimension(h),
                }
            )
        )
    else:
        emit(str(q if cfg.show_q else P))
    return status


def cmd_euler(cfg: RunConfig, emit) -> int:
    h = cfg.h
    e = betti.euler_number(h)
    status = 0
    if cfg.oracle:
        k = len(betti.fixed_points(h))
        if k != e:
            emit(f"FAIL formula {e} != |fixed points| {k}")
            status = 1
    if cfg.format == "json":
        emit(_dump({"n": cfg.n, "h": list(h.values), "euler": e}))
    else:
        emit(str(e))
    return status


def cmd_dimension(cfg: RunConfig, emit) -> int:
    h = cfg.h
    d = betti.dimension(h)
    status = 0
    if cfg.oracle:
        top = betti.poincare_bruteforce(h).degree() // 2
        if top != d:
            emit(f"FAIL formula {d} != oracle {top}")
            status = 1
    if cfg.format == "json":
        emit(_dump({"n": cfg.n, "h": list(h.values), "dimension": d}))
    else:
        emit(str(d))
    return status


def cmd_fixed_points(cfg: RunConfig, emit) -> int:
    fixed = betti.fixed_points(cfg.h)
    status = 0
    if cfg.oracle and fixed.perms != betti.fixed_points_by_roots(cfg.h).perms:
        emit("FAIL fixed points disagree with the root criterion")
        status = 1
    words = [format_perm(w) for w in fixed]
    if cfg.format == "json":
        emit(_dump({"n": cfg.n, "h": list(cfg.h.values), "fixed_points": words}))
    else:
        emit("\n".join(words))
    return status


def cmd_components(cfg: RunConfig, emit) -> int:
    comps = components.components(cfg.h)
    status = 0
    if cfg.oracle:
        brute = components.components_bruteforce(cfg.h)
        if {c.word for c in comps} != brute:
            emit(f"FAIL corners give {[format_perm(c.word) for c in comps]}, "
                 f"oracle gives {sorted(format_perm(w) for w in brute)}")
            status = 1
    if cfg.format == "json":
        emit(_dump([c.to_json() for c in comps]))
    else:
        emit(components.describe(comps))
    return status


def cmd_gkm(cfg: RunConfig, emit) -> int:
    g = gkm.hess_gkm_graph(cfg.h)
    if cfg.format == "text":
        lines = [f"vertices {len(g.vertices)}, edges {len(g.edges)}"]
        lines += [
            f"{format_perm(e.u)} -- {format_perm(e.v)}  {e.label.to_text()}" for e in g.edges
        ]
        emit("\n".join(lines))
    else:
        emit(gkm.export(g, cfg.format).rstrip("\n"))
    return 0


def cmd_gkm_dim(cfg: RunConfig, emit) -> int:
    if cfg.degree > cfg.degree_cap:
        raise UsageError(f"--degree {cfg.degree} exceeds --degree-cap {cfg.degree_cap}")
    if cfg.degree < 0:
        raise UsageError("--degree must be nonnegative")
    g = gkm.hess_gkm_graph(cfg.h)
    d = gkm.cochain_dimension(g, cfg.degree, cap=cfg.degree_cap)
    status = 0
    expected = None
    if cfg.oracle:
        expected = cohom.free_module_series(cfg.h, cfg.degree)[cfg.degree]
        if expected != d:
            emit(f"FAIL cochain dimension {d} != free-module count {expected}")
            status = 1
    if cfg.format == "json":
        obj = {"n": cfg.n, "h": list(cfg.h.values), "degree": cfg.degree, "dimension": d}
        if expected is not None:
            obj["expected"] = expected
        emit(_dump(obj))
    else:
        emit(str(d))
    return status


def cmd_cohomology(cfg: RunConfig, emit) -> int:
    Q = cohom.quotient_ring(cfg.h)
    status = 0
    obj: dict = {"n": cfg.n, "h": list(cfg.h.values), "basis": [format_perm(w) for w in Q.basis]}
    lines = ["basis: " + ", ".join(f"s[{format_perm(w)}]" for w in Q.basis)]
    want_hilbert = cfg.hilbert or cfg.oracle
    if want_hilbert:
        hs = Q.hilbert_series()
        obj["hilbert"] = hs.to_json()
        obj["dimension"] = hs(1)
        lines.append(f"hilbert: {hs}")
        lines.append(f"dimension: {hs(1)}")
        if cfg.oracle and hs != betti.poincare(cfg.h):
            emit(f"FAIL quotient Hilbert series {hs} != {betti.poincare(cfg.h)}")
            status = 1
    if cfg.table:
        table = Q.multiplication_table()
        obj["table"] = [
            {"u": format_perm(u), "v": format_perm(v), "product": vec.to_json()}
            for (u, v), vec in table.items()
        ]
        for (u, v), vec in table.items():
            lines.append(f"s[{format_perm(u)}] * s[{format_perm(v)}] = {vec}")
    if cfg.tanisaki:
        rep = cohom.tanisaki_check(3)
        obj["tanisaki"] = {
            "ok": rep.ok,
            "hilbert": rep.hilbert.to_json(),
            "generators": rep.generator_images,
        }
        lines.append(f"tanisaki: {'pass' if rep.ok else 'FAIL ' + str(rep.offending)}")
        if not rep.ok:
            status = 1
    emit(_dump(obj) if cfg.format == "json" else "\n".join(lines))
    return status


def cmd_check(cfg: RunConfig, emit) -> int:
    status, report = _sweep(cfg, emit)
    if cfg.format == "json":
        emit(_dump(report))
    else:
        passed = sum(r["ok"] for r in report["results"])
        emit(f"n={cfg.n}: {passed}/{len(report['results'])} Hessenberg functions pass")
    if cfg.out:
        _write(cfg.out, report)
    return status


def cmd_sweep(cfg: RunConfig, emit) -> int:
    status, report = _sweep(cfg, emit)
    if cfg.out:
        _write(cfg.out, report)
        passed = sum(r["ok"] for r in report["results"])
        emit(f"n={cfg.n}: {passed}/{len(report['results'])} pass; report written to {cfg.out}")
    else:
        emit(_dump(report))
    return status


def _write(path: str, report: dict) -> None:
    with open(path, "w") as fh:
        fh.write(_dump(report) + "\n")


HANDLERS = {
    "poincare": cmd_poincare,
    "euler": cmd_euler,
    "dimension": cmd_dimension,
    "fixed-points": cmd_fixed_points,
    "components": cmd_components,
    "gkm": cmd_gkm,
    "gkm-dim": cmd_gkm_dim,
    "cohomology": cmd_cohomology,
    "check": cmd_check,
    "sweep": cmd_sweep,
}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def emit(text: str) -> None:
        stdout.write(text + "\n")

    try:
        return HANDLERS[cfg.command](cfg, emit)
    except (UsageError, EnumerationGuardError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
