"""Command-line entry point: ``clustercol gen|check|transform|solve|verify``.

Exit codes: 0 means yes/contained/valid/passed, 1 means no, 2 means an error.
"""
from __future__ import annotations

import argparse
import inspect
import sys
from pathlib import Path
from typing import List, Optional

from . import harness
from . import io as fmt
from .containment import has_kst_subgraph, has_minor, has_odd_minor
from .generators import FamilySpec
from .list_machinery import (check_eta_g_bounded, enlarge_precolored, growth, progress, validate_L, validate_R)
from .solver import dp_clustered_coloring
from .structure import (Society, tangle_axioms_check, treewidth_heuristic, validate_tree_decomposition,
                        vortex_witness)

YES, NO, ERROR = 0, 1, 2


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _num(tok: str):
    try:
        return int(tok)
    except ValueError:
        return float(tok)


# --------------------------------------------------------------------------- gen

def cmd_gen(a) -> int:
    params = tuple(_num(x) for x in a.params.split(",")) if a.params else ()
    g = FamilySpec(a.family, params, a.seed).build()
    _emit(fmt.write_graph(g), a.output)
    return YES


# --------------------------------------------------------------------------- check

def _verdict(ok: bool, text: str = "") -> int:
    print(("yes" if ok else "no") + (f" {text}" if text else ""))
    return YES if ok else NO


def cmd_check(a) -> int:
    if a.minor or a.odd_minor:
        hp, gp = a.minor or a.odd_minor
        h, g = fmt.read_graph(_read(hp)), fmt.read_graph(_read(gp))
        if a.minor:
            model, colours = has_minor(g, h), None
        else:
            found = has_odd_minor(g, h)
            model, colours = (found[0], found[1].two_coloring) if found else (None, None)
        code = _verdict(model is not None)
        if model is not None and a.witness:
            sys.stdout.write(fmt.write_minor_model(model, colours))
        return code
    if a.kst:
        s, t, gp = a.kst
        found = has_kst_subgraph(fmt.read_graph(_read(gp)), int(s), int(t))
        code = _verdict(found is not None)
        if found and a.witness:
            print("S " + " ".join(map(str, sorted(found[0]))))
            print("T " + " ".join(map(str, sorted(found[1]))))
        return code
    if a.td:
        tp, gp = a.td
        g, td = fmt.read_graph(_read(gp)), fmt.read_td(_read(tp))
        v = validate_tree_decomposition(g, td)
        return _verdict(bool(v), f"width={td.width()}" if v else f"{v.reason} {v.witness}")
    if a.tangle:
        tp, gp = a.tangle
        g, t = fmt.read_graph(_read(gp)), fmt.read_tangle(_read(tp))
        rep = tangle_axioms_check(g, t.separations, t.order)
        name, why = rep.first_failure()
        return _verdict(rep.ok, "" if rep.ok else f"{name}: {why.reason} {why.witness}")
    if a.vortex:
        g = fmt.read_graph(_read(a.vortex))
        soc = Society(g, fmt.read_order(a.order or ""))
        w = vortex_witness(soc, a.rho)
        return _verdict(w is None, "" if w is None else f"u={w[0]} v={w[1]} paths={w[2]}")
    if a.list_axioms:
        lp, gp = a.list_axioms
        g, L = fmt.read_graph(_read(gp)), fmt.read_lists(_read(lp))
        if a.s is None or a.r is None:
            raise ValueError("--list-axioms needs --s and --r")
        v = validate_L(g, L, a.s, a.r) if a.ell is None else validate_R(g, L, a.s, a.ell, a.r)
        return _verdict(bool(v), "" if v else f"{v.axiom} vertex={v.vertex} {v.detail}")
    if a.bounded:
        lp, gp, cp, pp = a.bounded
        g, L = fmt.read_graph(_read(gp)), fmt.read_lists(_read(lp))
        c, pol = fmt.read_coloring(_read(cp)), fmt.read_policy(_read(pp))
        v = check_eta_g_bounded(g, L, c, pol)
        fails = [n for n, x in (("y1", v.y1_union), ("components", v.all_components), ("stable", v.stable)) if not x]
        return _verdict(v.ok, "" if v.ok else "failed=" + ",".join(fails))
    raise ValueError("check needs one of --minor, --odd-minor, --kst, --td, --tangle, --vortex, "
                     "--list-axioms, --bounded")


# --------------------------------------------------------------------------- transform

def cmd_transform(a) -> int:
    which = a.progress or a.growth or a.enlarge
    lp, gp = which
    g, L = fmt.read_graph(_read(gp)), fmt.read_lists(_read(lp))
    verts = lambda tok: fmt.read_order(tok or "")  # noqa: E731
    if a.progress:
        out = progress(g, L, verts(a.W), verts(a.F), a.s, a.seed, a.r)
    elif a.growth:
        out, _ = growth(g, L, verts(a.Z), a.ell, a.s, a.r, a.seed)
    else:
        out, _ = enlarge_precolored(g, L, verts(a.F), a.ell, a.s, a.r, a.seed)
    _emit(fmt.write_lists(out), a.output)
    return YES


# --------------------------------------------------------------------------- solve

def cmd_solve(a) -> int:
    g = fmt.read_graph(_read(a.graph))
    td = fmt.read_td(_read(a.td)) if a.td else treewidth_heuristic(g)[1]
    if a.lists:
        c = dp_clustered_coloring(g, td, a.eta, L=fmt.read_lists(_read(a.lists)))
    elif a.k is not None:
        c = dp_clustered_coloring(g, td, a.eta, k=a.k)
    else:
        raise ValueError("solve needs --k or --lists")
    if c is None:
        print("NO")
        return NO
    print("YES")
    sys.stdout.write(fmt.write_coloring(c))
    return YES


# --------------------------------------------------------------------------- verify

def _param_value(tok: str):
    if ";" in tok:
        return tuple(tuple(_num(x) for x in part.split(",")) for part in tok.split(";") if part)
    if "," in tok:
        return tuple(_num(x) for x in tok.split(","))
    try:
        return _num(tok)
    except ValueError:
        return tok


def cmd_verify(a) -> int:
    fn = harness.CAMPAIGNS[a.campaign]
    kwargs = {}
    for item in a.params or []:
        k, eq, v = item.partition("=")
        if not eq:
            raise ValueError(f"parameter {item!r} is not key=value")
        kwargs[k] = _param_value(v)
    if a.seed is not None:
        if "seed" not in inspect.signature(fn).parameters:
            raise ValueError(f"campaign {a.campaign} takes no seed")
        kwargs["seed"] = a.seed
    rep = fn(**kwargs)
    _emit(rep.to_text(), a.output)
    return YES if rep.passed else NO


# --------------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clustercol", description="Clustered colouring machinery at desk scale.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family instance")
    g.add_argument("--family", required=True)
    g.add_argument("--params", default="")
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="containment and validity checks")
    m = c.add_mutually_exclusive_group(required=True)
    m.add_argument("--minor", nargs=2, metavar=("H", "G"))
    m.add_argument("--odd-minor", nargs=2, metavar=("H", "G"))
    m.add_argument("--kst", nargs=3, metavar=("S", "T", "G"))
    m.add_argument("--td", nargs=2, metavar=("TD", "G"))
    m.add_argument("--tangle", nargs=2, metavar=("TANGLE", "G"))
    m.add_argument("--vortex", metavar="G")
    m.add_argument("--list-axioms", nargs=2, metavar=("LISTS", "G"))
    m.add_argument("--bounded", nargs=4, metavar=("LISTS", "G", "COLORING", "POLICY"))
    c.add_argument("--witness", action="store_true")
    c.add_argument("--order", help="cyclic order for --vortex, comma separated")
    c.add_argument("--rho", type=int, default=1)
    c.add_argument("--s", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--ell", type=int, help="check the R axioms with this ell instead of the L axioms")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("transform", help="list-assignment transformations")
    m = t.add_mutually_exclusive_group(required=True)
    m.add_argument("--progress", nargs=2, metavar=("LISTS", "G"))
    m.add_argument("--growth", nargs=2, metavar=("LISTS", "G"))
    m.add_argument("--enlarge", nargs=2, metavar=("LISTS", "G"))
    t.add_argument("--s", type=int, required=True)
    t.add_argument("--r", type=int)
    t.add_argument("--ell", type=int)
    t.add_argument("--W")
    t.add_argument("--F")
    t.add_argument("--Z")
    t.add_argument("--seed", type=int)
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_transform)

    s = sub.add_parser("solve", help="exact clustered colouring")
    s.add_argument("graph")
    s.add_argument("--eta", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--lists")
    s.add_argument("--td")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("campaign", choices=sorted(harness.CAMPAIGNS))
    v.add_argument("--params", nargs="*", metavar="KEY=VALUE")
    v.add_argument("--seed", type=int)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return ERROR if e.code else YES
    try:
        if a.command == "transform":
            if (a.growth or a.enlarge) and (a.r is None or a.ell is None):
                raise ValueError("--growth and --enlarge need --r and --ell")
        return a.func(a)
    except (ValueError, OSError, KeyError, AssertionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
