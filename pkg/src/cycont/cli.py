"""Command-line front end: eval, classify, search, construct, graph, xi.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (including
size-guard refusals), 3 algorithmic no-result (failed construction, absent
preimage).  Machine output is JSON (``--format json``); ``search`` also
supports CSV rows, one per optimum.

The alphabet is resolved from ``--alphabet`` (characters, or comma-separated
tokens), else defaults to a,b,c,... sized by ``--values`` or the vector, else
for word commands to the sorted distinct letters of the word itself.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .continuants import (
    DomainError,
    continuant_regular,
    continuant_semiregular,
    cyclic_regular,
    cyclic_semiregular,
)
from .extremal import SyncKind, build_exchange_graph, classify, search
from .singular import construct_singular, xi_cyclic, xi_linear, xi_preimage
from .words import CyclicWord, OrderedAlphabet, ParikhVector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NO_RESULT = 3

DEFAULT_LIMIT = 14
_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _split_tokens(text: str) -> list[str]:
    if "," in text:
        return [p for p in text.split(",") if p]
    return list(text)


def _resolve_alphabet(args, size_hint: int | None = None) -> OrderedAlphabet:
    values = None
    if getattr(args, "values", None):
        try:
            values = tuple(int(v) for v in args.values.split(","))
        except ValueError:
            raise CliError(f"cannot parse values {args.values!r}", EXIT_USAGE)
    if getattr(args, "alphabet", None):
        symbols = tuple(_split_tokens(args.alphabet))
    elif values is not None:
        if len(values) > len(_LETTERS):
            raise CliError("too many values for a default alphabet", EXIT_USAGE)
        symbols = tuple(_LETTERS[: len(values)])
    elif size_hint is not None:
        if size_hint > len(_LETTERS):
            raise CliError("too many letters for a default alphabet", EXIT_USAGE)
        symbols = tuple(_LETTERS[:size_hint])
    elif getattr(args, "word", None):
        symbols = tuple(sorted(set(_split_tokens(args.word))))
    else:
        raise CliError("cannot infer an alphabet; pass --alphabet", EXIT_USAGE)
    try:
        return OrderedAlphabet(symbols, values)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def _parse_word(args, alphabet: OrderedAlphabet):
    try:
        return alphabet.word(args.word)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def _parse_vector(args, alphabet: OrderedAlphabet) -> ParikhVector:
    try:
        counts = tuple(int(c) for c in args.vector.split(","))
        return ParikhVector(alphabet, counts)
    except ValueError as exc:
        raise CliError(f"bad vector {args.vector!r}: {exc}", EXIT_USAGE) from None


def _check_guard(total: int, limit: int) -> None:
    if total > limit:
        raise CliError(
            f"class of total {total} exceeds the enumeration guard "
            f"({limit}); raise it with --limit",
            EXIT_DOMAIN,
        )


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


# -- subcommands ---------------------------------------------------------------

_EVAL_KINDS = ("regular", "semiregular", "cyclic-regular", "cyclic-semiregular")


def cmd_eval(args) -> int:
    alphabet = _resolve_alphabet(args)
    word = _parse_word(args, alphabet)
    if len(word) == 0:
        raise CliError("empty word", EXIT_DOMAIN)
    requested = [k for k in _EVAL_KINDS if getattr(args, k.replace("-", "_"))]
    if not requested:
        requested = list(_EVAL_KINDS)
        if alphabet.values and min(alphabet.values) < 2:
            requested = ["regular", "cyclic-regular"]
    evaluators = {
        "regular": lambda: continuant_regular(word),
        "semiregular": lambda: continuant_semiregular(word),
        "cyclic-regular": lambda: cyclic_regular(CyclicWord(word)),
        "cyclic-semiregular": lambda: cyclic_semiregular(CyclicWord(word)),
    }
    results = {kind: evaluators[kind]() for kind in requested}
    payload = {
        "word": str(word),
        "representative": str(CyclicWord(word)),
        "alphabet": list(alphabet.symbols),
        "values": list(alphabet.values) if alphabet.values else None,
        "results": results,
    }
    if len(results) == 1:
        lines = [str(next(iter(results.values())))]
    else:
        lines = [f"{kind} = {value}" for kind, value in results.items()]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    alphabet = _resolve_alphabet(args)
    word = _parse_word(args, alphabet)
    if len(word) == 0:
        raise CliError("empty word", EXIT_DOMAIN)
    omega = CyclicWord(word)
    m = classify(omega)
    payload = {
        "word": str(word),
        "canonical": str(omega),
        "in_S": m.in_S,
        "in_S_alt": m.in_S_alt,
        "in_U": m.in_U,
        "in_U_alt": m.in_U_alt,
    }
    lines = [f"canonical {omega}"] + [
        f"{name} {str(val).lower()}"
        for name, val in payload.items()
        if name.startswith("in_")
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _membership_dict(m) -> dict:
    return {
        "in_S": m.in_S,
        "in_S_alt": m.in_S_alt,
        "in_U": m.in_U,
        "in_U_alt": m.in_U_alt,
    }


def cmd_search(args) -> int:
    size_hint = args.vector.count(",") + 1
    alphabet = _resolve_alphabet(args, size_hint=size_hint)
    vector = _parse_vector(args, alphabet)
    if vector.total < 1:
        raise CliError("zero vector", EXIT_DOMAIN)
    _check_guard(vector.total, args.limit)
    report = search(
        vector,
        valuation=args.valuation,
        direction=args.direction,
        jobs=args.jobs,
    )
    payload = {
        "vector": list(vector.counts),
        "alphabet": list(alphabet.symbols),
        "values": list(alphabet.values) if alphabet.values else None,
        "valuation": report.valuation,
        "direction": report.direction,
        "value": report.value,
        "class_size": report.class_size,
        "unique_up_to_reversal": report.unique_up_to_reversal,
        "optima": [
            {"word": str(w), **_membership_dict(m)}
            for w, m in zip(report.optima, report.certificates)
        ],
    }
    if args.format == "csv":
        rows = ["word,value,in_S,in_S_alt,in_U,in_U_alt,unique_up_to_reversal"]
        for w, m in zip(report.optima, report.certificates):
            rows.append(
                f"{w},{report.value},{m.in_S},{m.in_S_alt},{m.in_U},"
                f"{m.in_U_alt},{report.unique_up_to_reversal}"
            )
        print("\n".join(rows))
        return EXIT_OK
    lines = [
        f"{report.direction} {report.valuation} value {report.value} "
        f"over {report.class_size} cyclic words",
        *(f"optimum {w}" for w in report.optima),
        f"unique_up_to_reversal {str(report.unique_up_to_reversal).lower()}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_construct(args) -> int:
    size_hint = args.vector.count(",") + 1
    alphabet = _resolve_alphabet(args, size_hint=size_hint)
    vector = _parse_vector(args, alphabet)
    if vector.total < 1:
        raise CliError("zero vector", EXIT_DOMAIN)
    outcome, trace = construct_singular(vector)
    payload = {
        "vector": list(vector.counts),
        "alphabet": list(alphabet.symbols),
        "steps": [
            {"vector": list(s.vector.counts), "letter": s.letter, "delta": s.delta}
            for s in trace.steps
        ],
        "terminal": list(trace.terminal.counts),
        "seed_letter": trace.seed_letter,
        "words": [str(w) for w in trace.words] if trace.words else None,
        "outcome": str(outcome) if outcome else None,
    }
    lines = [f"start {','.join(map(str, vector.counts))}"]
    for s in trace.steps:
        lines.append(
            f"take {s.delta} x {s.letter} -> {','.join(map(str, s.vector.counts))}"
        )
    if outcome is not None:
        assert trace.words is not None
        lines.append("words " + " ".join(str(w) for w in trace.words))
        lines.append(f"outcome {outcome}")
    else:
        lines.append("FAILURE")
    _emit(args, payload, lines)
    return EXIT_OK if outcome is not None else EXIT_NO_RESULT


def cmd_graph(args) -> int:
    size_hint = args.vector.count(",") + 1
    alphabet = _resolve_alphabet(args, size_hint=size_hint)
    vector = _parse_vector(args, alphabet)
    if vector.total < 1:
        raise CliError("zero vector", EXIT_DOMAIN)
    _check_guard(vector.total, args.limit)
    graph = build_exchange_graph(vector, args.kind)
    vertex_names = [str(v) for v in graph.vertices]
    edges = {str(v): [str(t) for t in graph.successors(v)] for v in graph.vertices}
    if args.dot:
        out = [f'digraph exchange_{args.kind.value} {{']
        for v in vertex_names:
            out.append(f'  "{v}";')
        for v, targets in edges.items():
            for t in targets:
                out.append(f'  "{v}" -> "{t}";')
        out.append("}")
        print("\n".join(out))
        return EXIT_OK
    payload = {
        "vector": list(vector.counts),
        "alphabet": list(alphabet.symbols),
        "kind": args.kind.value,
        "vertices": vertex_names,
        "edges": edges,
        "sources": [str(v) for v in graph.sources()],
        "sinks": [str(v) for v in graph.sinks()],
        "acyclic": graph.is_acyclic(),
        "edge_count": sum(len(t) for t in edges.values()),
    }
    lines = [
        f"{len(vertex_names)} vertices, {payload['edge_count']} edges, "
        f"acyclic {str(payload['acyclic']).lower()}",
        "sources " + " ".join(payload["sources"]),
        "sinks " + " ".join(payload["sinks"]),
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_xi(args) -> int:
    alphabet = _resolve_alphabet(args)
    word = _parse_word(args, alphabet)
    if len(word) == 0:
        raise CliError("empty word", EXIT_DOMAIN)
    if args.letter not in alphabet.symbols:
        raise CliError(f"letter {args.letter!r} not in alphabet", EXIT_USAGE)
    subject = CyclicWord(word) if args.cyclic else word
    if args.inverse:
        result = xi_preimage(args.letter, subject)
    elif args.cyclic:
        result = xi_cyclic(args.letter, subject)
    else:
        result = xi_linear(args.letter, subject)
    payload = {
        "letter": args.letter,
        "input": str(subject),
        "cyclic": args.cyclic,
        "inverse": args.inverse,
        "result": str(result) if result is not None else None,
    }
    _emit(args, payload, [str(result) if result is not None else "no preimage"])
    return EXIT_OK if result is not None else EXIT_NO_RESULT


# -- parser ---------------------------------------------------------------------

def _add_common(
    p: argparse.ArgumentParser, *, jobs: bool = False, default_format: str = "text"
) -> None:
    p.add_argument("--alphabet", help="symbols, as characters or comma-separated")
    p.add_argument("--values", help="comma-separated integer values per symbol")
    p.add_argument(
        "--format", choices=("text", "json", "csv"), default=default_format,
        help=f"output format (default {default_format})",
    )
    p.add_argument(
        "--limit", type=int, default=DEFAULT_LIMIT,
        help=f"enumeration size guard (default {DEFAULT_LIMIT})",
    )
    if jobs:
        p.add_argument(
            "--jobs", type=int, default=1,
            help="parallel evaluation degree (default 1)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cycont",
        description="Exact continuants on cyclic words: evaluation, "
        "classification, extremal search, and singular-word construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate continuants of a word")
    _add_common(p)
    p.add_argument("--word", required=True)
    for kind in _EVAL_KINDS:
        p.add_argument(f"--{kind}", action="store_true")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("classify", help="synchronization class membership")
    _add_common(p)
    p.add_argument("--word", required=True)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("search", help="exhaustive extremal search over a class")
    _add_common(p, jobs=True, default_format="json")
    p.add_argument("--vector", required=True)
    val = p.add_mutually_exclusive_group(required=True)
    val.add_argument(
        "--regular", dest="valuation", action="store_const", const="regular"
    )
    val.add_argument(
        "--semiregular", dest="valuation", action="store_const", const="semiregular"
    )
    d = p.add_mutually_exclusive_group(required=True)
    d.add_argument("--max", dest="direction", action="store_const", const="max")
    d.add_argument("--min", dest="direction", action="store_const", const="min")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("construct", help="build the singular word for a vector")
    _add_common(p)
    p.add_argument("--vector", required=True)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("graph", help="exchange graph of a symmetric class")
    _add_common(p, default_format="json")
    p.add_argument("--vector", required=True)
    k = p.add_mutually_exclusive_group()
    k.add_argument(
        "--plain", dest="kind", action="store_const", const=SyncKind.PLAIN
    )
    k.add_argument("--alt", dest="kind", action="store_const", const=SyncKind.ALT)
    p.add_argument("--dot", action="store_true", help="emit DOT text instead")
    p.set_defaults(handler=cmd_graph, kind=SyncKind.PLAIN)

    p = sub.add_parser("xi", help="apply an insertion map or its inverse")
    _add_common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--letter", required=True)
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(handler=cmd_xi)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"cycont: error: {exc}", file=sys.stderr)
        return exc.code
    except DomainError as exc:
        print(f"cycont: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"cycont: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
