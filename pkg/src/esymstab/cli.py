"""Command-line entry point.

Exit codes: 0 when every assertion holds, 1 when a refutation was found,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import EsymError, NotMonomial, NotStabilizer
from .esym import EsymSpec, elementary
from .groups import enumerate_group
from .multipoly import render_polynomial
from .parser import load_matrix, parse_polynomial, parse_vector
from .report import Report, jsonable
from .stabilizer import (decompose_stabilizer, is_stabilizer, mpb_invariance_check,
                         product_stabilizer_check, verify_rank_lemma_grid,
                         verify_rank_lemma_vector, verify_theorem1)
from .weights import enumerate_ssyt, is_semistandard, verify_theorem_group, weight_of_tableau

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="esymstab", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=["text", "json"], default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    def nr(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        return p

    def randomized(p):
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        return p

    nr(sub.add_parser("esym", help="print e_r in n variables"))
    p = nr(sub.add_parser("check-stab", help="test whether a matrix stabilizes a polynomial"))
    p.add_argument("--matrix", required=True, help="JSON array of rows")
    p.add_argument("--poly", help="polynomial text (default: e_r)")
    p = nr(sub.add_parser("decompose", help="split a stabilizer into permutation and root of unity"))
    p.add_argument("--matrix", required=True)
    nr(sub.add_parser("enum-stab", help="list S_n x Z_r"))
    randomized(nr(sub.add_parser("verify-thm1", help="confirm and stress-test the stabilizer")))
    p = nr(sub.add_parser("rank-lemma", help="rank criterion for deg f_{a,b} <= 1"))
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", help="comma-separated scalars, e.g. --a=1,-1,0,0,0")
    g.add_argument("--grid", type=int, metavar="B", help="exhaust {-B..B}^n")
    nr(sub.add_parser("product-stab", help="stabilizer of e_1 * e_{r-1}"))
    randomized(nr(sub.add_parser("mpb-check", help="invariance of E_r on matrices")))
    nr(sub.add_parser("lattice-verify", help="lattice generated by the weight generators"))
    p = sub.add_parser("tableaux", help="enumerate semistandard tableaux")
    p.add_argument("--shape", type=_int_list, required=True, help="e.g. 2,1")
    p.add_argument("--max-entry", type=int, required=True)
    return ap


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(jsonable(payload), indent=2, sort_keys=True))
    else:
        print(text)


def _emit_report(args, rep: Report):
    _emit(args, rep.to_json(), rep.to_text())
    return EXIT_OK if rep.passed else EXIT_REFUTED


def _load(args):
    m = load_matrix(args.matrix)
    if m.n != args.n:
        raise EsymError(f"matrix is {m.n}x{m.n} but --n is {args.n}")
    return m


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except (NotStabilizer, NotMonomial) as exc:
        _emit(args, {"error": type(exc).__name__, "message": str(exc)}, f"false: {exc}")
        return EXIT_REFUTED
    except (EsymError, OSError, json.JSONDecodeError) as exc:
        print(f"esymstab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "tableaux":
        tabs = enumerate_ssyt(args.shape, args.max_entry)
        payload = {"shape": list(args.shape), "max_entry": args.max_entry, "count": len(tabs),
                   "tableaux": [{"rows": t.to_json(),
                                 "weight": list(weight_of_tableau(t, args.max_entry))}
                                for t in tabs]}
        text = "\n\n".join(str(t) for t in tabs) + f"\n\n{len(tabs)} tableaux"
        _emit(args, payload, text)
        return EXIT_OK if all(is_semistandard(t) for t in tabs) else EXIT_REFUTED

    n, r = args.n, args.r
    if cmd == "esym":
        p = elementary(EsymSpec(n, r))
        s = render_polynomial(p)
        _emit(args, {"n": n, "r": r, "terms": len(p.terms), "polynomial": s}, s)
        return EXIT_OK
    if cmd == "check-stab":
        m = _load(args)
        p = parse_polynomial(args.poly, n) if args.poly else elementary(EsymSpec(n, r))
        ok = is_stabilizer(m, p)
        _emit(args, {"n": n, "r": r, "polynomial": render_polynomial(p), "matrix": m.rows,
                     "stabilizer": ok}, "true" if ok else "false")
        return EXIT_OK if ok else EXIT_REFUTED
    if cmd == "decompose":
        d = decompose_stabilizer(_load(args), EsymSpec(n, r))
        payload = {"n": n, "r": r, "perm": d.perm.one_line(), "omega": d.omega}
        _emit(args, payload, f"perm {d.perm.one_line()}  omega {jsonable(d.omega)}")
        return EXIT_OK
    if cmd == "enum-stab":
        elems = enumerate_group(n, r)
        payload = {"n": n, "r": r, "count": len(elems),
                   "elements": [{"perm": g.perm.one_line(), "k": g.k} for g in elems]}
        lines = [f"{g.perm.one_line()} k={g.k}" for g in elems] + [f"{len(elems)} elements"]
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK
    if cmd == "verify-thm1":
        return _emit_report(args, verify_theorem1(n, r, args.trials, args.seed))
    if cmd == "rank-lemma":
        if args.grid is not None:
            return _emit_report(args, verify_rank_lemma_grid(n, r, args.grid))
        return _emit_report(args, verify_rank_lemma_vector(EsymSpec(n, r), parse_vector(args.a)))
    if cmd == "product-stab":
        return _emit_report(args, product_stabilizer_check(n, r))
    if cmd == "mpb-check":
        return _emit_report(args, mpb_invariance_check(n, r, args.trials, args.seed))
    if cmd == "lattice-verify":
        return _emit_report(args, verify_theorem_group(n, r))
    raise AssertionError(cmd)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
