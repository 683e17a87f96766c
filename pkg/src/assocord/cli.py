"""Command-line interface: ``assocord <subcommand> ...``.

Exit status is 0 when every comparison made by the command passes, 1 on a
mismatch or disagreement and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import names_for
from .classifier import (LocalNotFree, ProfileError, UnsupportedGroup, UnsupportedProfile,
                         classify, end_to_end_check)
from .groups import GroupError, restrict_subgroup
from .induction import induction_report, presentation_is_order
from .lattices import (LatticeError, PresentationError, TracePresentation, associated_order,
                       reconstruct_presentation)
from .local_freeness import hybrid_check, is_free_over_associated_order, randomized_iso_search
from .parsing import (ParseError, load_profiles, parse_lattice, parse_presentation, read_spec,
                      resolve_group, resolve_subgroup)
from .reproduce import ALIASES, TARGETS, canonical_target, report_lines, run_target

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _emit(args, text_lines: list[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(text_lines))


def _group_arg(args):
    return resolve_group(args.group) if getattr(args, "group", None) else None


def _bool(v) -> str:
    return "unknown" if v is None else str(v).lower()


def cmd_assoc_order(args) -> int:
    L = parse_lattice(read_spec(args.lattice), _group_arg(args))
    A = associated_order(L)
    tp = reconstruct_presentation(A, args.prime)
    names = names_for(L.group.name)
    expr = tp.expression(L.group.name, names) if tp else None
    lines = [expr] if expr else []
    lines.append(A.dump())
    _emit(args, lines, {"group": L.group.name, "presentation": expr, "dump": A.dump(),
                        "is_group_ring": A.den == 1})
    return EXIT_OK


def cmd_free(args) -> int:
    L = parse_lattice(read_spec(args.lattice), _group_arg(args))
    rep = is_free_over_associated_order(L, args.prime)
    payload = rep.as_dict()
    lines = [_bool(rep.free)]
    if args.witness and rep.free:
        iso = randomized_iso_search(L, rep.order, args.prime, attempts=args.attempts, seed=args.seed)
        payload["witness_search"] = iso.label()
        if iso.witness is not None:
            payload["witness"] = str(iso.witness)
            lines.append(str(iso.witness))
        else:
            lines.append(iso.label())
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_induce(args) -> int:
    G = resolve_group(args.group)
    H = resolve_subgroup(G, args.subgroup)
    tp = parse_presentation(read_spec(args.presentation), G, args.prime)
    Hg = H.as_group()
    try:
        tp_H = TracePresentation(Hg, tp.p, [(n, restrict_subgroup(Hg, P)) for n, P in tp.levels])
    except GroupError:
        raise ParseError(f"the presentation uses subgroups outside {args.subgroup}") from None
    if not presentation_is_order(tp_H):
        raise ParseError("the presentation is not an order over the subgroup")
    rep = induction_report(tp_H, G, conjugates=not args.no_conjugates)
    names = names_for(G.name)
    payload = rep.as_dict(names)
    lines = [f"induced: {payload['induced']}", f"order:   {payload['order']}",
             f"induced closed form agrees: {_bool(rep.induced_agrees)}",
             f"order closed form agrees:   {_bool(rep.order_agrees)}",
             f"is ring: {_bool(rep.is_ring)}  all normal: {_bool(rep.all_normal)}"]
    if rep.conjugates_agree is not None:
        lines.append(f"conjugate intersection agrees: {_bool(rep.conjugates_agree)}")
    _emit(args, lines, payload)
    ok = rep.induced_agrees and rep.order_agrees and rep.is_ring == rep.all_normal
    return EXIT_OK if ok else EXIT_MISMATCH


def _profile_text(arg: str) -> str:
    text = read_spec(arg)
    if not text.lstrip().startswith("{") and Path(text).is_file():
        text = Path(text).read_text()
    return text


def cmd_classify(args) -> int:
    label, profiles = load_profiles(_profile_text(args.profile))
    v = classify(label, profiles, assume_arithmetic=args.assume_arithmetic)
    payload = {"group": label, **v.as_dict()}
    lines = [f"{label}: {v.label()}", f"rule: {v.rule}"]
    if v.conditional:
        lines.append("conditional on the assumed arithmetic hypotheses")
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_check(args) -> int:
    label, profiles = load_profiles(_profile_text(args.profile))
    results, lines, agree = [], [], True
    for p in sorted(profiles):
        r = end_to_end_check(label, profiles[p])
        agree &= r.agree
        results.append({"p": p, **r.as_dict()})
        lines.append(f"p={p}: theorem {_bool(r.theorem)}, engine {_bool(r.engine)}, "
                     f"{'agree' if r.agree else 'DISAGREE'}")
        if r.induced:
            lines.append(f"  induced {r.induced}, order {r.order}")
        lines.append(f"  rule: {r.rule}")
    _emit(args, lines, {"group": label, "results": results, "agree": agree})
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_reproduce(args) -> int:
    target = canonical_target(args.target)
    results = run_target(target, jobs=args.jobs, seed=args.seed, attempts=args.attempts)
    ok = all(r.ok for r in results)
    lines = report_lines(target, results)
    _emit(args, lines, {"target": target, "cases": [r.as_dict() for r in results], "ok": ok})
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_hybrid(args) -> int:
    G = resolve_group(args.group)
    N = resolve_subgroup(G, args.subgroup)
    res = hybrid_check(G, N, args.prime)
    _emit(args, [_bool(res)], {"group": G.name, "N_order": N.order, "p": args.prime, "hybrid": res})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--attempts", type=int, default=10_000)
    common.add_argument("--jobs", type=int, default=1)

    ap = argparse.ArgumentParser(prog="assocord",
                                 description="Associated orders and freeness of lattices in Q[G].")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("assoc-order", parents=[common], help="associated order of a lattice")
    s.add_argument("lattice", help="lattice expression or @file")
    s.add_argument("--group")
    s.add_argument("--prime", type=int)
    s.set_defaults(func=cmd_assoc_order)

    s = sub.add_parser("free", parents=[common], help="freeness over the associated order at p")
    s.add_argument("lattice")
    s.add_argument("--group")
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--witness", action="store_true", help="search for a generator")
    s.set_defaults(func=cmd_free)

    s = sub.add_parser("induce", parents=[common], help="induce a trace-sum order from a subgroup")
    s.add_argument("group")
    s.add_argument("subgroup")
    s.add_argument("presentation", help="terms 1/p^n Tr(P) with P named in the group")
    s.add_argument("--prime", type=int)
    s.add_argument("--no-conjugates", action="store_true")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("classify", parents=[common], help="freeness verdict from ramification profiles")
    s.add_argument("profile", help="JSON text, a path or @file")
    s.add_argument("--assume-arithmetic", action="store_true",
                   help="accept dihedral degrees whose arithmetic hypotheses are not on record")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("check", parents=[common], help="compare theorem and engine verdicts")
    s.add_argument("profile")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("reproduce", parents=[common], help="run a reference target")
    s.add_argument("target", choices=sorted(TARGETS) + sorted(ALIASES))
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("hybrid", parents=[common], help="hybrid certificate for (G, N, p)")
    s.add_argument("group")
    s.add_argument("subgroup")
    s.add_argument("--prime", type=int, required=True)
    s.set_defaults(func=cmd_hybrid)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.text:
            print(exc.pointer(), file=sys.stderr)
        return EXIT_INPUT
    except (GroupError, LatticeError, PresentationError, ProfileError, UnsupportedGroup,
            UnsupportedProfile, LocalNotFree, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
