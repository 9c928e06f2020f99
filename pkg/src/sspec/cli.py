"""``sspec`` command line.

Exit codes: 0 success, 1 a counterexample was found, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .corpus import CorpusEntry, CorpusReport, CorpusSpec, load_corpus, verify_corpus
from .errors import SSpecError, TheoremCounterexample
from .goingdown import ORDER_MODES, GoingDownReport, search_pair
from .ideals import all_ideals, ideal_generated, mult_closure, s_radical
from .ring import load_ring, ring_label
from .spectrum import spec_s, spectrum_to_json
from .topology import (connected_components, irreducible_components, is_t0, s_flat_topology,
                       s_zariski_topology, specialization_dot)
from .verifier import ALL_TAGS, FAIL

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_elements(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def parse_tags(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _emit(args, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _ring_and_mults(args):
    R = load_ring(args.ring)
    return R, mult_closure(R, parse_elements(args.mults))


def _pts(space, mask: int) -> list[list[int]]:
    return [list(space.points[k].ideal.members) for k in range(len(space)) if mask >> k & 1]


# ---------------------------------------------------------------------------
# subcommands

def cmd_ideals(args) -> int:
    R = load_ring(args.ring)
    ideals = all_ideals(R)
    _emit(args, {"ring": R.description, "ideals": [list(I.members) for I in ideals]},
          "\n".join(str(list(I.members)) for I in ideals))
    return EXIT_OK


def cmd_spec(args) -> int:
    R, S = _ring_and_mults(args)
    space = spec_s(R, S)
    lines = [f"Spec_S of {ring_label(R.description)} with S = {list(S.members)}: {len(space)} points"]
    for k, p in enumerate(space.points):
        lines.append(f"  [{k}] {list(p.ideal.members)}  witnesses={list(p.witnesses)}  "
                     f"prime={'yes' if p.is_prime else 'no'}  colon_prime={list(p.colon_prime.members)}")
    _emit(args, spectrum_to_json(space), "\n".join(lines))
    return EXIT_OK


def cmd_radical(args) -> int:
    R, S = _ring_and_mults(args)
    I = ideal_generated(R, parse_elements(args.ideal))
    rad = s_radical(R, S, I)
    _emit(args, {"ideal": list(I.members), "mults": list(S.members), "s_radical": list(rad.members)},
          str(list(rad.members)))
    return EXIT_OK


def _topology(args):
    R, S = _ring_and_mults(args)
    space = spec_s(R, S)
    T = s_flat_topology(space) if args.kind == "flat" else s_zariski_topology(space)
    return space, T


def cmd_topology(args) -> int:
    space, T = _topology(args)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(specialization_dot(space, T))
    closures = [_pts(space, c) for c in T.point_closures]
    payload = {"kind": T.kind, "points": [list(p.ideal.members) for p in space.points],
               "opens": [_pts(space, o) for o in T.opens],
               "point_closures": closures, "t0": is_t0(space, T)}
    lines = [f"{T.kind} topology on {len(space)} points, {len(T.opens)} opens, T0={payload['t0']}"]
    lines += [f"  open {o}" for o in payload["opens"]]
    lines += [f"  closure of {payload['points'][k]}: {c}" for k, c in enumerate(closures)]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_components(args) -> int:
    space, T = _topology(args)
    irr = [_pts(space, c) for c in irreducible_components(T)]
    con = [_pts(space, c) for c in connected_components(T)]
    lines = [f"{T.kind}: {len(irr)} irreducible, {len(con)} connected components"]
    lines += [f"  irreducible {c}" for c in irr] + [f"  connected {c}" for c in con]
    _emit(args, {"kind": T.kind, "irreducible": irr, "connected": con}, "\n".join(lines))
    return EXIT_OK


def _report_text(report: CorpusReport) -> str:
    lines = []
    for e in report.entries + report.morphisms:
        head = ring_label(e.ring.description)
        if e.target is not None:
            head += f" -> {ring_label(e.target.description)}"
        for c in e.checks:
            lines.append(f"{head:<28} S<{','.join(map(str, e.mults)) or '1'}>  "
                         f"{c.id:<15} {c.status:<8} {c.detail}")
            if c.status == FAIL:
                lines.append(f"    witness: {json.dumps(c.witness)}")
    for s in report.skipped_pairs:
        lines.append(f"skipped pair: {s}")
    n = report.counts()
    lines.append(f"pass={n['pass']} fail={n['fail']} skipped={n['skipped']}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    only = set(parse_tags(args.only)) if args.only else None
    if only:
        unknown = only - set(ALL_TAGS)
        if unknown:
            raise InputError(f"unknown theorem tags: {sorted(unknown)}")
    if args.corpus:
        if args.ring:
            raise InputError("use either --corpus or --ring, not both")
        spec = load_corpus(args.corpus)
    elif args.ring:
        R = load_ring(args.ring)
        gens = parse_elements(args.mults)
        mult_closure(R, gens)
        spec = CorpusSpec([CorpusEntry(R, [gens])])
    else:
        raise InputError("verify needs --ring or --corpus")
    report = verify_corpus(spec, only)
    _emit(args, report.to_json(), _report_text(report))
    return report.exit_status


def cmd_goingdown(args) -> int:
    R1 = load_ring(args.source)
    R2 = load_ring(args.target)
    S = mult_closure(R1, parse_elements(args.mults))
    report = GoingDownReport(args.order.replace("-", "_"))
    search_pair(R1, S, R2, report.order_mode, report)
    lines = [f"going-down ({report.order_mode}) {ring_label(R1.description)} -> "
             f"{ring_label(R2.description)}: {report.morphisms_checked} morphisms, "
             f"{report.instances_checked} instances"]
    for c in report.counterexamples:
        lines.append(f"  fails: morphism={c['morphism']} p_low={c['p_low']} p_high={c['p_high']} "
                     f"q_high={c['q_high']}")
    lines.append(report.to_json()["result"])
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_COUNTEREXAMPLE if report.found else EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sspec", description="S-prime spectra of finite commutative rings")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ring=True, mults=True):
        if ring:
            sp.add_argument("--ring", required=True, help="ring description JSON file")
        if mults:
            sp.add_argument("--mults", default="", help="comma-separated generators of S (empty: S = {1})")
        sp.add_argument("--format", choices=["text", "json"], default="text")

    common(sub.add_parser("ideals", help="list every ideal"), mults=False)
    common(sub.add_parser("spec", help="S-prime spectrum with witnesses"))
    rad = sub.add_parser("radical", help="S-radical of an ideal")
    common(rad)
    rad.add_argument("--ideal", default="", help="comma-separated generators of the ideal")
    for name in ("topology", "components"):
        sp = sub.add_parser(name, help=f"{name} of the S-flat or S-Zariski topology")
        common(sp)
        sp.add_argument("--kind", choices=["flat", "zariski"], default="flat")
        if name == "topology":
            sp.add_argument("--dot", help="write the specialization graph as DOT to this path")
    ver = sub.add_parser("verify", help="run the theorem checks")
    ver.add_argument("--ring")
    ver.add_argument("--mults", default="")
    ver.add_argument("--corpus", help="'builtin' or a corpus JSON file")
    ver.add_argument("--only", help="comma-separated theorem tags")
    ver.add_argument("--format", choices=["text", "json"], default="text")
    gd = sub.add_parser("goingdown", help="search going-down counterexamples")
    gd.add_argument("--source", required=True)
    gd.add_argument("--target", required=True)
    gd.add_argument("--mults", default="")
    gd.add_argument("--order", choices=[m.replace("_", "-") for m in ORDER_MODES] + list(ORDER_MODES),
                    default="containment")
    gd.add_argument("--format", choices=["text", "json"], default="text")
    return p


COMMANDS = {"ideals": cmd_ideals, "spec": cmd_spec, "radical": cmd_radical,
            "topology": cmd_topology, "components": cmd_components, "verify": cmd_verify,
            "goingdown": cmd_goingdown}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:       # argparse reports usage errors itself
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except TheoremCounterexample as exc:
        print(f"sspec: counterexample: {exc} {json.dumps(exc.payload)}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except (SSpecError, InputError, OSError) as exc:
        print(f"sspec: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
