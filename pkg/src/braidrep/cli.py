"""Command-line front end.

Every subcommand reads and writes the JSON formats defined by the library
(matrices carry exact scalar strings; words are arrays like "sigma:1^1").
Exit codes: 0 all checks passed, 1 some check failed, 2 usage/parse error.

    braidrep check PRESENTATION.json REP.json
    braidrep classify MATRICES.json
    braidrep reduce REP.json
    braidrep witness REP.json --word-a sigma:1,rho:1 --word-b rho:1,sigma:1
    braidrep phi-extend REP.json --t 1 --u 0 --v 0
    braidrep phi-match --b 1 --d 3 --x 1 --f 2 --g 1
    braidrep promote REP.json
    braidrep gen-system TVB
    braidrep audit [--seed N] [--samples N] [--only TAG] [--pretty]
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import equal_image_witness, reducibility_audit
from .audit import AUDIT_TAGS, run_audit
from .catalog import Representation
from .classifier import classify_solution, generate_system
from .extensions import (
    PhiCoefficients, SingularTauError, phi_extend, promote_to_group,
    solve_phi_match,
)
from .matrices import Matrix, MatrixError, NonInvertibleError
from .presentations import (
    Generator, Presentation, PresentationError, build_presentation,
    word_from_json,
)
from .rings import QQ, RingError


class CliError(Exception):
    pass


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_representation(path):
    try:
        return Representation.from_json(_load_json(path))
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad representation file {path}: {exc}") from exc


def _emit(payload, pretty):
    print(json.dumps(payload, indent=2 if pretty else None, sort_keys=False))


def _parse_word_arg(text):
    if not text or text == "e":
        return ()
    return word_from_json([item if "^" in item else item + "^1"
                           for item in text.split(",")])


def cmd_check(args):
    pres_obj = _load_json(args.presentation)
    try:
        pres = Presentation.from_json(pres_obj)
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad presentation file: {exc}") from exc
    rep = _load_representation(args.representation)
    if (rep.presentation.structure, rep.presentation.n) != (pres.structure, pres.n):
        raise CliError(
            f"representation targets {rep.presentation.structure}_"
            f"{rep.presentation.n}, presentation file declares "
            f"{pres.structure}_{pres.n}")
    report = rep.check_relations()
    if args.pretty:
        for check in report.checks:
            print(f"{check.tag:10s} {'pass' if check.ok else 'FAIL'}")
        print(f"{sum(c.ok for c in report.checks)}/{len(report.checks)} pass")
    else:
        _emit(report.to_json(), False)
    return 0 if report.all_pass else 1


def cmd_classify(args):
    obj = _load_json(args.matrices)
    structure = obj.get("structure", "TVB")
    if structure not in ("TVB", "STVB"):
        raise CliError("structure must be TVB or STVB")
    try:
        images = {Generator.parse(name): Matrix.from_json(m)
                  for name, m in obj["matrices"].items()}
        result = classify_solution(images, structure)
    except (KeyError, MatrixError, RingError, PresentationError) as exc:
        raise CliError(f"bad matrices file: {exc}") from exc
    _emit(result.to_json(), args.pretty)
    return 0 if result.primary is not None else 1


def cmd_reduce(args):
    rep = _load_representation(args.representation)
    report = reducibility_audit(rep)
    _emit(report.to_json(), args.pretty)
    return 0


def cmd_witness(args):
    rep = _load_representation(args.representation)
    try:
        w1 = _parse_word_arg(args.word_a)
        w2 = _parse_word_arg(args.word_b)
        report = equal_image_witness(rep, w1, w2,
                                     search_separating=args.search)
    except (ValueError, PresentationError) as exc:
        raise CliError(str(exc)) from exc
    _emit(report.to_json(), args.pretty)
    return 0


def cmd_phi_extend(args):
    rep = _load_representation(args.representation)
    try:
        coeffs = PhiCoefficients(rep.ring.parse(args.t), rep.ring.parse(args.u),
                                 rep.ring.parse(args.v))
        extended = phi_extend(rep, coeffs)
    except (RingError, NonInvertibleError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    _emit(extended.to_json(), args.pretty)
    return 0


def cmd_phi_match(args):
    try:
        params = {name: QQ.parse(getattr(args, name)) for name in "bdxfg"}
        result = solve_phi_match(params)
    except RingError as exc:
        raise CliError(str(exc)) from exc
    _emit(result.to_json(), args.pretty)
    return 0 if result.status == "unique" else 1


def cmd_promote(args):
    rep = _load_representation(args.representation)
    try:
        promoted = promote_to_group(rep)
    except SingularTauError as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    _emit(promoted.to_json(), args.pretty)
    return 0


def cmd_gen_system(args):
    structure = args.structure
    if structure not in ("TVB", "STVB"):
        raise CliError("structure must be TVB or STVB")
    system = generate_system(structure)
    _emit(system.to_json(), args.pretty)
    return 0


def cmd_audit(args):
    summary = run_audit(seed=args.seed, samples=args.samples, only=args.only)
    if args.pretty:
        for entry in summary.entries:
            print(f"{entry.theorem_tag:5s} {entry.verdict:8s} "
                  f"{entry.claim_summary}")
        counts = summary.counts()
        print(f"pass={counts['pass']} flagged={counts['flagged']} "
              f"fail={counts['fail']}")
    else:
        _emit(summary.to_json(), False)
    return 1 if summary.any_fail else 0


def cmd_export_presentation(args):
    try:
        pres = build_presentation(args.structure, args.n)
    except PresentationError as exc:
        raise CliError(str(exc)) from exc
    _emit(pres.to_json(), args.pretty)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidrep",
        description="exact checks for local representations of braid-like "
                    "groups and monoids")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--pretty", action="store_true",
                       help="human-readable output")
        p.set_defaults(fn=fn)
        return p

    p = add("check", cmd_check, help="relation report for a representation")
    p.add_argument("presentation")
    p.add_argument("representation")

    p = add("classify", cmd_classify,
            help="match concrete images against the catalog families")
    p.add_argument("matrices")

    p = add("reduce", cmd_reduce, help="reducibility report")
    p.add_argument("representation")

    p = add("witness", cmd_witness, help="compare images of two words")
    p.add_argument("representation")
    p.add_argument("--word-a", required=True)
    p.add_argument("--word-b", required=True)
    p.add_argument("--search", action="store_true",
                   help="search the catalog for a separating certificate")

    p = add("phi-extend", cmd_phi_extend,
            help="extend a TVB representation to STVB")
    p.add_argument("representation")
    p.add_argument("--t", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = add("phi-match", cmd_phi_match,
            help="solve the eta1 extension-matching system")
    for name in "bdxfg":
        p.add_argument(f"--{name}", required=True)

    p = add("promote", cmd_promote,
            help="adjoin inverse singular generators (STVB -> STVG)")
    p.add_argument("representation")

    p = add("gen-system", cmd_gen_system,
            help="emit the classification polynomial system")
    p.add_argument("structure", choices=["TVB", "STVB"])

    p = add("presentation", cmd_export_presentation,
            help="emit a presentation as JSON")
    p.add_argument("structure")
    p.add_argument("n", type=int)

    p = add("audit", cmd_audit, help="run the full claim-by-claim audit")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--only", choices=list(AUDIT_TAGS), default=None)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
