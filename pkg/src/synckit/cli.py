"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 resource cap,
4 internal consistency failure.  The census cap can be overridden with the
SYNCKIT_CENSUS_CAP environment variable or bypassed with --force.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import census as census_mod
from . import digraphs, families, formats, plots
from .automata import Dfa, greedy_reset_word, shortest_reset_length
from .digraphs import Digraph
from .errors import (
    InputError,
    IntegrityError,
    InternalConsistencyError,
    ParseError,
    ResourceCapError,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_INTERNAL = 4

CAP_ENV_VAR = "SYNCKIT_CENSUS_CAP"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for parse errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="synckit",
                     description="Synchronizing automata and primitive digraph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_check = sub.add_parser("check",
                             help="test a DFA document for synchronizability and exact reset length")
    p_check.add_argument("input", help="automaton document (text or JSON), '-' for stdin")
    p_check.add_argument("--format", choices=("text", "json"), default="text",
                         help="output format")
    p_check.add_argument("--state-cap", type=int, default=26,
                         help="largest state count accepted by the subset search")
    p_check.add_argument("--greedy", action="store_true",
                         help="also report the greedy upper-bound reset word")

    p_family = sub.add_parser("family",
                              help="emit a named automaton or digraph family member")
    p_family.add_argument("name", help="cerny, wielandt, dprime, ddprime, bn, "
                                       "or thm3:W|D|O1|O2|O3|O4")
    p_family.add_argument("n", type=int, help="number of states / vertices")
    p_family.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_family.add_argument("--dot", dest="format", action="store_const", const="dot",
                          help="shorthand for --format dot")
    p_family.add_argument("--json", dest="format", action="store_const", const="json",
                          help="shorthand for --format json")
    p_family.add_argument("--exponent", action="store_true",
                          help="print the exponent instead (digraph families only)")

    p_census = sub.add_parser("census",
                              help="exhaustive reset-length census over all canonical ICDFAs")
    p_census.add_argument("n", type=int)
    p_census.add_argument("k", type=int)
    p_census.add_argument("--workers", type=int, default=1, metavar="N")
    p_census.add_argument("--checkpoint", metavar="PATH",
                          help="persist completed slices here and resume from it")
    p_census.add_argument("--min-length", type=int, default=0, metavar="L",
                          help="pool lengths below L into one bucket")
    p_census.add_argument("--force", action="store_true",
                          help="run even above the feasibility cap")
    p_census.add_argument("--quotient-letters", action="store_true",
                          help="analyse the letter-renaming-quotient histogram")
    p_census.add_argument("--out", default=".", metavar="DIR",
                          help="directory for CSV, report, and figure output")
    p_census.add_argument("--format", choices=("text", "json"), default="text",
                          help="gap report format")
    p_census.add_argument("--no-figure", action="store_true",
                          help="skip the histogram figure")

    p_conj = sub.add_parser("conjecture",
                            help="sweep primitive digraphs for worst best-coloring reset lengths")
    p_conj.add_argument("vertices", type=int)
    p_conj.add_argument("--letters", type=int, default=2)
    p_conj.add_argument("--cap", type=int, default=5,
                        help="largest vertex count accepted")
    p_conj.add_argument("--out", default=".", metavar="DIR")
    p_conj.add_argument("--format", choices=("text", "json"), default="text")
    p_conj.add_argument("--no-figure", action="store_true")
    return parser


def _read_input(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    try:
        return Path(spec).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {spec}: {exc}") from exc


def _cmd_check(args) -> int:
    doc = formats.parse_document(_read_input(args.input))
    if isinstance(doc, Digraph):
        raise InputError("check expects an automaton document, got a digraph")
    dfa = doc.dfa
    result = shortest_reset_length(dfa, state_cap=args.state_cap)
    payload: dict = {"n": dfa.n, "k": dfa.k, "synchronizing": result is not None}
    if result is not None:
        length, witness = result
        payload["reset_length"] = length
        payload["witness"] = formats.word_to_str(witness)
    if args.greedy:
        word = greedy_reset_word(dfa)
        payload["greedy_witness"] = None if word is None else formats.word_to_str(word)
        payload["greedy_length"] = None if word is None else len(word)
    if args.format == "json":
        import json

        print(json.dumps(payload, indent=2))
    else:
        print(f"synchronizing: {'yes' if payload['synchronizing'] else 'no'}")
        if result is not None:
            print(f"reset length: {payload['reset_length']}")
            print(f"witness: {payload['witness'] or '(empty word)'}")
        if args.greedy:
            print(f"greedy length: {payload['greedy_length']}")
    return EXIT_OK


def _cmd_family(args) -> int:
    spec = families.family_from_name(args.name, args.n)
    obj = families.build_family(spec)
    if args.exponent:
        if not isinstance(obj, Digraph):
            raise InputError(f"{args.name} is an automaton family; --exponent applies "
                             "to digraph families")
        value = digraphs.exponent(obj)
        expected = families.known_exponent(spec)
        if value != expected:
            raise InternalConsistencyError(
                f"computed exponent {value} != certified value {expected}"
            )
        print(value)
        return EXIT_OK
    label = f"{args.name}-{args.n}".replace(":", "-")
    if isinstance(obj, Dfa):
        if args.format == "json":
            out = formats.automaton_to_json(formats.AutomatonDocument(obj, name=label))
        elif args.format == "dot":
            out = formats.dfa_to_dot(obj, name=label)
        else:
            out = formats.format_automaton_text(obj)
    else:
        if args.format == "json":
            out = formats.digraph_to_json(obj, name=label)
        elif args.format == "dot":
            out = formats.digraph_to_dot(obj, name=label)
        else:
            out = formats.format_digraph_text(obj)
    sys.stdout.write(out)
    return EXIT_OK


def _cmd_census(args) -> int:
    cap = census_mod.DEFAULT_CENSUS_CAP
    env_cap = os.environ.get(CAP_ENV_VAR)
    if env_cap is not None:
        try:
            cap = int(env_cap)
        except ValueError:
            raise InputError(f"{CAP_ENV_VAR} must be an integer, got {env_cap!r}") from None

    def progress(done, total):
        print(f"slice {done}/{total} merged", file=sys.stderr)

    result = census_mod.reset_length_census(
        args.n,
        args.k,
        min_length_of_interest=args.min_length,
        worker_count=args.workers,
        checkpoint_path=args.checkpoint,
        force=args.force,
        cap=cap,
        progress=progress,
    )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"census_n{args.n}_k{args.k}"

    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", encoding="utf-8") as fh:
        formats.write_histogram_csv(result.histogram, fh)
    lq_path = out_dir / f"{stem}_letter_classes.csv"
    with open(lq_path, "w", encoding="utf-8") as fh:
        formats.write_histogram_csv(result.letter_classes, fh)

    hist = result.letter_classes if args.quotient_letters else result.histogram
    report = census_mod.gap_report(hist, args.n)
    if args.format == "json":
        import json

        report_path = out_dir / f"{stem}_gaps.json"
        report_path.write_text(json.dumps({
            "n": report.n, "lo": report.lo, "hi": report.hi,
            "counts": [list(c) for c in report.counts],
            "empty_lengths": list(report.empty_lengths),
            "islands": [list(i) for i in report.islands],
            "interior_gaps": [list(g) for g in report.interior_gaps],
            "max_attained": report.max_attained,
            "upper_gap": list(report.upper_gap) if report.upper_gap else None,
            "matches_gap_structure": report.matches_gap_structure,
        }, indent=2) + "\n", encoding="utf-8")
    else:
        report_path = out_dir / f"{stem}_gaps.txt"
        report_path.write_text(report.format_text(), encoding="utf-8")

    written = [csv_path, lq_path, report_path]
    if not args.no_figure:
        fig_path = out_dir / f"{stem}.png"
        plots.save_histogram_figure(hist, fig_path, n=args.n, k=args.k, gap=report)
        written.append(fig_path)

    mx = result.histogram.max_length()
    print(f"censused {result.histogram.total:,} automata: "
          f"{result.histogram.nonsync:,} non-synchronizing, max reset length {mx}")
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    report = digraphs.conjecture_sweep(args.vertices, args.letters,
                                       vertex_cap=args.cap)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"conjecture_n{report.n}_k{report.k}"

    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", encoding="utf-8") as fh:
        for value in sorted(report.value_counts):
            fh.write(f"{value},{report.value_counts[value]}\n")
        fh.write(f"nocoloring,{report.no_sync_coloring}\n")
        fh.write(f"classes,{report.classes}\n")
    written = [csv_path]

    lines = [
        f"primitive digraph classes on {report.n} vertices, out-degree <= {report.k}: "
        f"{report.classes}",
        f"bound n^2-3n+3 = {report.bound}",
        f"max over classes of the best coloring reset length: {report.max_value}",
        f"classes with no synchronizing coloring: {report.no_sync_coloring}",
    ]
    if report.violations:
        lines.append(f"counterexample candidates: {len(report.violations)}")
        for finding in report.violations:
            edges = sorted(finding.digraph.edges)
            lines.append(f"  value {finding.value} edges {edges}")
    else:
        lines.append("no counterexample candidates")
    text = "\n".join(lines) + "\n"
    if args.format == "json":
        import json

        report_path = out_dir / f"{stem}.json"
        report_path.write_text(json.dumps({
            "n": report.n, "k": report.k, "bound": report.bound,
            "classes": report.classes, "max_value": report.max_value,
            "no_sync_coloring": report.no_sync_coloring,
            "value_counts": {str(v): c for v, c in sorted(report.value_counts.items())},
            "violations": [
                {"value": f.value, "edges": sorted(f.digraph.edges)}
                for f in report.violations
            ],
        }, indent=2) + "\n", encoding="utf-8")
    else:
        report_path = out_dir / f"{stem}.txt"
        report_path.write_text(text, encoding="utf-8")
    written.append(report_path)

    if not args.no_figure and report.value_counts:
        fig_path = out_dir / f"{stem}.png"
        plots.save_conjecture_figure(report.value_counts, report.bound, fig_path,
                                     n=report.n, k=report.k)
        written.append(fig_path)

    sys.stdout.write(text)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


_COMMANDS = {
    "check": _cmd_check,
    "family": _cmd_family,
    "census": _cmd_census,
    "conjecture": _cmd_conjecture,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"synckit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IntegrityError as exc:
        print(f"synckit: checkpoint error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceCapError as exc:
        print(f"synckit: refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalConsistencyError as exc:
        print(f"synckit: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as exc:
        print(f"synckit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
