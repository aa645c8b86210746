"""Command-line front end.

Builds the requested objects from flags, runs the selected verification
suites, and emits a deterministic JSON report: checks are computed in
isolated tasks (optionally in parallel) and always assembled in sorted
order, so repeated runs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from gmpy2 import mpq

from .bialgebroid import build_bialgebroid, verify_bialgebroid
from .cocycle import (
    classify,
    cocycle_from_json,
    lambda_rescale,
    normalize,
    verify_cocycle,
)
from .comodule import attach_coaction, coaction_of_coproduct, verify_comodule_axioms
from .crossmod import adjoint, verify_aut, verify_crossed_module
from .errors import (
    HopfGaloisError,
    InputError,
    NotCocommutative,
    RootUnavailable,
    UnsupportedFamily,
)
from .field import field
from .galois import (
    build_galois,
    build_graded_galois,
    build_taft_galois,
    verify_translation_identities,
)
from .gauge import (
    bialgebroid_iso,
    bisection_product,
    enumerate_characters,
    solve_extended_gauge,
    taft_display_order,
)
from .hopf import LinearMap, build_group_algebra, build_taft, verify_hopf

TOOL = "hopfgalois 0.1.0"

COMMANDS = (
    "verify-hopf",
    "galois-check",
    "bialgebroid",
    "characters",
    "gauge-solve",
    "crossed-module",
    "cocycle",
)


def _parse_scalar_flag(fld, text, flag):
    try:
        if "," in text:
            return fld.scalar([mpq(part) for part in text.split(",")])
        return fld.scalar(mpq(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(flag, f"bad scalar: {exc}") from None


def _parse_group_flag(text):
    try:
        factors = [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError("--group", "expected comma-separated integers") from None
    if not factors or any(n < 1 for n in factors):
        raise InputError("--group", "factors must be positive integers")
    return factors


def _load_cocycle(fld, path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError("--cocycle", str(exc)) from None
    except json.JSONDecodeError as exc:
        raise InputError("--cocycle", f"invalid JSON: {exc}") from None
    return cocycle_from_json(fld, obj)


def _build_hopf(fld, args):
    if args.taft is not None:
        return build_taft(fld, args.taft, args.q_index)
    if args.group is not None:
        return build_group_algebra(fld, _parse_group_flag(args.group))
    raise InputError("--taft/--group", "a Hopf algebra family is required")


def _build_extension(fld, args):
    if args.self_hopf:
        h = _build_hopf(fld, args)
        com = attach_coaction(h.algebra, h, coaction_of_coproduct(h))
        return build_galois(com)
    if args.taft is not None:
        s = _parse_scalar_flag(fld, args.s, "--s")
        return build_galois(build_taft_galois(fld, args.taft, args.q_index, s))
    if args.group is not None:
        factors = _parse_group_flag(args.group)
        if args.cocycle:
            c = _load_cocycle(fld, args.cocycle)
            if c.factors != factors:
                raise InputError("--cocycle",
                                 f"group {c.factors} does not match --group {factors}")
            lam = c.values
        else:
            elements = list(itertools.product(*(range(n) for n in factors)))
            lam = {(g, h): fld.one for g in elements for h in elements}
        return build_galois(build_graded_galois(fld, factors, lam))
    raise InputError("--taft/--group", "a comodule algebra family is required")


def _records(rep, prefix=""):
    out = []
    for c in rep.checks:
        item = {"name": prefix + c["check"],
                "status": "pass" if c["ok"] else "fail"}
        if c["witness"] is not None:
            item["witness"] = str(c["witness"])
        out.append(item)
    return out


def _record(name, status, witness=None, data=None):
    item = {"name": name, "status": status}
    if witness is not None:
        item["witness"] = str(witness)
    if data is not None:
        item["data"] = data
    return item


def _render_matrix(fld, m, dim, order=None):
    idx = order if order is not None else list(range(dim))
    rows = []
    for r in idx:
        col = m.column(r)
        rows.append([repr(col.get(c, fld.zero)) for c in idx])
    return rows


# ---------------------------------------------------------------- commands

def _cmd_verify_hopf(fld, args):
    def run():
        return _records(verify_hopf(_build_hopf(fld, args)))
    return {"axioms": run}


def _cmd_galois_check(fld, args):
    def comodule():
        ext = _build_extension(fld, args)
        com = ext.base
        return _records(verify_comodule_axioms(com.algebra, com.hopf,
                                               com.coaction))

    def canonical():
        ext = _build_extension(fld, args)
        recs = [_record("canonical map well defined",
                        "pass" if ext.well_defined else "fail")]
        recs.append(_record(
            "canonical map bijective",
            "pass" if ext.is_galois else "fail",
            witness=None if ext.is_galois else f"rank deficit {ext.rank_deficit}",
            data={"is_galois": ext.is_galois}))
        return recs

    def translation():
        ext = _build_extension(fld, args)
        if not ext.is_galois:
            return [_record("translation identities", "skipped",
                            witness="canonical map is not bijective")]
        return _records(verify_translation_identities(ext))

    return {"comodule": comodule, "canonical": canonical,
            "translation": translation}


def _cmd_bialgebroid(fld, args):
    def axioms():
        bia = build_bialgebroid(_build_extension(fld, args))
        recs = _records(verify_bialgebroid(bia))
        recs.append(_record("coinvariant dimension", "pass",
                            data={"dimension": bia.dim}))
        return recs

    def iso():
        bia = build_bialgebroid(_build_extension(fld, args))
        try:
            out = bialgebroid_iso(bia)
        except (UnsupportedFamily, NotCocommutative) as exc:
            return [_record("underlying Hopf algebra identified", "skipped",
                            witness=exc)]
        return [_record("underlying Hopf algebra identified",
                        "pass" if out.ok else "fail")]

    return {"axioms": axioms, "iso": iso}


def _cmd_characters(fld, args):
    def enumerate_suite():
        bia = build_bialgebroid(_build_extension(fld, args))
        chars = enumerate_characters(bia)
        recs = [_record("character count", "pass",
                        data={"count": len(chars)})]
        ok = all(c.is_bisection() for c in chars)
        recs.append(_record("characters are bisections",
                            "pass" if ok else "fail"))
        table = []
        for a in chars:
            row = []
            for b in chars:
                prod = bisection_product(a, b, bia)
                hits = [k for k, c in enumerate(chars) if c == prod]
                row.append(hits[0] if len(hits) == 1 else None)
            table.append(row)
        closed = all(v is not None for row in table for v in row)
        recs.append(_record("character group closed", "pass" if closed else "fail",
                            data={"cayley_table": table}))
        if closed:
            n = len(chars)
            abelian = all(table[i][j] == table[j][i]
                          for i in range(n) for j in range(n))
            cyclic = False
            for g in range(n):
                reach = set()
                cur = g
                for _ in range(n):
                    reach.add(cur)
                    cur = table[cur][g]
                if len(reach) == n:
                    cyclic = True
                    break
            recs.append(_record("character group abelian",
                                "pass" if abelian else "fail"))
            recs.append(_record("character group cyclic",
                                "pass" if cyclic else "fail"))
        return recs

    return {"enumerate": enumerate_suite}


def _cmd_gauge_solve(fld, args):
    def family():
        ext = _build_extension(fld, args)
        fam = solve_extended_gauge(ext)
        na = ext.algebra.dim
        data = {"free_parameters": fam.free_parameters,
                "required_nonzero": fam.required_nonzero()}
        part_cols = [dict() for _ in range(na)]
        for k, v in fam.particular.items():
            i, j = divmod(k, na)
            part_cols[j][i] = v
        part = LinearMap.from_columns(fld, na, part_cols)
        mats = [part] + [fam.instantiate([1 if t == u else 0
                                          for u in range(fam.free_parameters)])
                         for t in range(fam.free_parameters)]
        data["particular"] = _render_matrix(fld, mats[0], na)
        data["basis"] = [_render_matrix(fld, m, na) for m in mats[1:]]
        hopf = ext.hopf
        n = getattr(hopf, "taft_n", None)
        if n in (2, 3):
            order = taft_display_order(n)
            data["paper_layout"] = {
                "order": order,
                "particular": _render_matrix(fld, mats[0], na, order),
                "basis": [_render_matrix(fld, m, na, order) for m in mats[1:]],
            }
        return [_record("extended gauge family", "pass", data=data)]

    def collapse():
        ext = _build_extension(fld, args)
        bia = build_bialgebroid(ext)
        try:
            chars = enumerate_characters(bia)
        except (UnsupportedFamily, NotCocommutative) as exc:
            return [_record("strict subgroup", "skipped", witness=exc)]
        return [_record("strict subgroup", "pass",
                        data={"order": len(chars)})]

    suites = {"family": family}
    if not args.extended:
        suites["strict"] = collapse
    return suites


def _cmd_crossed_module(fld, args):
    def verify():
        bia = build_bialgebroid(_build_extension(fld, args))
        try:
            chars = enumerate_characters(bia)
        except (UnsupportedFamily, NotCocommutative) as exc:
            return [_record("crossed module", "skipped", witness=exc)]
        auts = [verify_aut(LinearMap.identity(fld, bia.dim),
                           LinearMap.identity(fld, bia.base.dim), bia)]
        auts += [adjoint(c, bia) for c in chars]
        return _records(verify_crossed_module(chars, auts, bia))

    return {"verify": verify}


def _cmd_cocycle(fld, args):
    if not args.cocycle:
        raise InputError("--cocycle", "a cocycle file is required")

    def identity_suite():
        c = _load_cocycle(fld, args.cocycle)
        return _records(verify_cocycle(c))

    def classify_suite():
        c = normalize(_load_cocycle(fld, args.cocycle))
        if not verify_cocycle(c).ok:
            return [_record("cohomology class", "skipped",
                            witness="cocycle identity fails")]
        out = classify(c)
        if out["trivial"]:
            mu = {str(g): repr(v) for g, v in out["mu"].items()}
            return [_record("cohomology class", "pass",
                            data={"trivial": True, "mu": mu})]
        g, h, b = out["witness"]
        return [_record("cohomology class", "pass",
                        data={"trivial": False,
                              "witness": [list(g), list(h), repr(b)]})]

    def rescale_suite():
        c = normalize(_load_cocycle(fld, args.cocycle))
        if not verify_cocycle(c).ok:
            return [_record("inverse-pair trivialization", "skipped",
                            witness="cocycle identity fails")]
        try:
            lam_big, mu, rescaled = lambda_rescale(c)
        except RootUnavailable:
            return [_record(
                "inverse-pair trivialization", "skipped",
                witness=(f"required square root missing in Q(zeta_{fld.conductor});"
                         f" retry with --field {2 * fld.conductor}"))]
        data = {"mu": {str(g): repr(v) for g, v in mu.items()}}
        ok = verify_cocycle(rescaled).ok
        return [_record("inverse-pair trivialization",
                        "pass" if ok else "fail", data=data)]

    return {"identity": identity_suite, "classify": classify_suite,
            "rescale": rescale_suite}


_DISPATCH = {
    "verify-hopf": _cmd_verify_hopf,
    "galois-check": _cmd_galois_check,
    "bialgebroid": _cmd_bialgebroid,
    "characters": _cmd_characters,
    "gauge-solve": _cmd_gauge_solve,
    "crossed-module": _cmd_crossed_module,
    "cocycle": _cmd_cocycle,
}


def _parser():
    p = argparse.ArgumentParser(prog="hopfgalois",
                                description="Exact Hopf-Galois verification")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--field", type=int,
                   default=int(os.environ.get("HG_FIELD_M", "12")),
                   help="conductor M of the working cyclotomic field")
    p.add_argument("--taft", type=int, default=None, metavar="N")
    p.add_argument("--q-index", type=int, default=1, metavar="K")
    p.add_argument("--s", default="0", metavar="SCALAR")
    p.add_argument("--group", default=None, metavar="N1,N2,...")
    p.add_argument("--cocycle", default=None, metavar="FILE")
    p.add_argument("--self-hopf", action="store_true")
    p.add_argument("--extended", action="store_true")
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--suite", default=None, metavar="NAME[,NAME...]")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    return p


def run(argv=None):
    args = _parser().parse_args(argv)
    if args.field < 1:
        raise InputError("--field", "conductor must be at least 1")
    fld = field(args.field)
    suites = _DISPATCH[args.command](fld, args)
    if args.suite is not None:
        wanted = args.suite.split(",")
        unknown = [w for w in wanted if w not in suites]
        if unknown:
            raise InputError("--suite",
                             f"unknown suite(s) {unknown}; available: "
                             f"{sorted(suites)}")
        suites = {k: suites[k] for k in wanted}

    names = sorted(suites)
    if args.jobs > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(lambda k: suites[k](), names))
    else:
        results = [suites[k]() for k in names]
    checks = [rec for recs in results for rec in recs]
    checks.sort(key=lambda r: r["name"])

    report = {
        "tool": TOOL,
        "command": args.command,
        "config": {
            "field": args.field,
            "taft": args.taft,
            "q_index": args.q_index,
            "s": args.s,
            "group": args.group,
            "cocycle": args.cocycle,
            "self_hopf": args.self_hopf,
            "extended": args.extended,
            "suite": args.suite,
        },
        "ok": all(r["status"] != "fail" for r in checks),
        "checks": checks,
    }
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["ok"] else 1


def main(argv=None):
    try:
        return run(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HopfGaloisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
