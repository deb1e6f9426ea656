"""Command line entry point: ``steiner-doubling {construct,verify,factorize}``.

Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error,
3 a constructed object failed its own verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import DEFAULT_TRIPLE, build_chain, seed_sts9
from .design import DifferenceTriple
from .errors import InvalidTriple, SteinerError, VerificationFailed
from .factorization import circle_method_factorization, difference_factorization, reduced_family
from .formats import (
    DesignDocument,
    atomic_write,
    design_to_txt,
    document_to_json,
    factors_to_json,
    factors_to_txt,
    read_document,
)
from .verification import (
    max_independent_brute,
    upper_chromatic_brute,
    verify_bicoloring,
    verify_factorization,
    verify_independent,
    verify_maximal_independent,
    verify_sts,
)

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _triple(text: str) -> DifferenceTriple:
    try:
        return DifferenceTriple.parse(text)
    except (SteinerError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="steiner-doubling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build STS(2^n - 7) by iterated v -> 2v+7 doubling")
    c.add_argument("--target-n", type=int, required=True)
    c.add_argument("--triple", type=_triple, default=DEFAULT_TRIPLE)
    c.add_argument("--phi", choices=("parity", "index"), default="parity")
    c.add_argument("--out", required=True, help="output file, or directory with --emit-chain")
    c.add_argument("--format", choices=("json", "txt"), default="json")
    c.add_argument("--emit-chain", action="store_true", help="write every level of the chain")

    v = sub.add_parser("verify", help="check a design file")
    v.add_argument("--in", dest="path", required=True)
    v.add_argument("--check", choices=("sts", "independent", "maximal", "bicoloring", "all"))
    v.add_argument("--brute", choices=("max-independent", "upper-chromatic"), action="append")
    v.add_argument("--json", action="store_true", help="machine-readable report")

    f = sub.add_parser("factorize", help="write a 1-factorization")
    f.add_argument("--n", type=int)
    f.add_argument("--m", type=int)
    f.add_argument("--exclude", type=_triple)
    f.add_argument("--method", choices=("difference", "circle"), default="difference")
    f.add_argument("--out", required=True)
    f.add_argument("--format", choices=("json", "txt"), default="txt")
    return parser


def _document(system, indep=None, coloring=None, trace=None) -> DesignDocument:
    meta = None
    if trace is not None:
        meta = {"n": trace.n, "triple": list(trace.triple), "phi": trace.phi.tags()}
    return DesignDocument(system, indep, coloring, meta)


def _render(doc: DesignDocument, fmt: str) -> str:
    return document_to_json(doc) if fmt == "json" else design_to_txt(doc.system)


def _final_check(doc: DesignDocument) -> None:
    if not verify_sts(doc.system).passed:
        raise VerificationFailed(f"STS({doc.system.v}) failed verification")
    if doc.independent_set is not None:
        if not verify_maximal_independent(doc.system, doc.independent_set).passed:
            raise VerificationFailed("carried independent set is not maximal")
    if doc.coloring is not None and not verify_bicoloring(doc.system, doc.coloring).passed:
        raise VerificationFailed("carried coloring is not a bicoloring")


def cmd_construct(args) -> int:
    if args.target_n < 4:
        print(f"error: --target-n must be >= 4 (the seed is STS(9)), got {args.target_n}", file=sys.stderr)
        return EXIT_USAGE
    try:
        traces = build_chain(args.target_n, args.triple, args.phi)
    except InvalidTriple as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    seed = seed_sts9()
    if args.phi == "parity":
        docs = [_document(seed.system, seed.independent_set, seed.coloring)]
    else:
        docs = [_document(seed.system)]
    docs += [_document(t.result, t.carried_independent_set, t.carried_coloring, t) for t in traces]
    if not args.emit_chain:
        docs = docs[-1:]

    for doc in docs:
        _final_check(doc)
    out = Path(args.out)
    for doc in docs:
        target = out / f"sts_{doc.system.v}.{args.format}" if args.emit_chain else out
        atomic_write(target, _render(doc, args.format))
        print(f"v={doc.system.v} blocks={len(doc.system.blocks)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = read_document(args.path)
    except (OSError, SteinerError, ValueError, KeyError) as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    checks = args.check or ("all" if not args.brute else None)
    wanted = ("sts", "independent", "maximal", "bicoloring") if checks == "all" else (checks,) if checks else ()
    reports = []
    for name in wanted:
        if name == "sts":
            reports.append(verify_sts(doc.system))
        elif name in ("independent", "maximal"):
            if doc.independent_set is None:
                if checks == "all":
                    continue
                print(f"error: {args.path} carries no independent set", file=sys.stderr)
                return EXIT_USAGE
            rep = verify_independent(doc.system, doc.independent_set)
            if name == "maximal" and rep.passed:
                rep = verify_maximal_independent(doc.system, doc.independent_set)
            reports.append(rep)
        elif name == "bicoloring":
            if doc.coloring is None:
                if checks == "all":
                    continue
                print(f"error: {args.path} carries no coloring", file=sys.stderr)
                return EXIT_USAGE
            reports.append(verify_bicoloring(doc.system, doc.coloring))

    brute = {}
    try:
        for name in args.brute or ():
            if name == "max-independent":
                size, witness = max_independent_brute(doc.system)
                brute[name] = {"value": size, "witness": sorted(witness)}
            else:
                k, col = upper_chromatic_brute(doc.system)
                brute[name] = {"value": k, "witness": list(col.assignment) if col else []}
    except SteinerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    ok = all(r.passed for r in reports)
    if args.json:
        payload = {"passed": ok, "reports": [r.to_dict() for r in reports], "brute": brute}
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in reports:
            print(f"{r.subject}: {'PASS' if r.passed else 'FAIL'}")
            for rule, witness in r.violations[:20]:
                print(f"  {rule}: {witness}")
        for name, res in brute.items():
            print(f"{name}: {res['value']}")
    return EXIT_OK if ok else EXIT_CHECK


def cmd_factorize(args) -> int:
    if args.method == "circle":
        if args.m is None or args.n is not None:
            print("error: the circle method takes an even order via --m, not --n", file=sys.stderr)
            return EXIT_USAGE
        if args.exclude is not None:
            print("error: --exclude only applies to the difference method", file=sys.stderr)
            return EXIT_USAGE
        try:
            fact = circle_method_factorization(args.m)
        except SteinerError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        factors = list(fact.factors)
    else:
        if args.n is None or args.n < 2 or args.m is not None:
            print("error: the difference method needs --n >= 2", file=sys.stderr)
            return EXIT_USAGE
        fact = difference_factorization(args.n)
        factors = list(fact.factors)
        if args.exclude is not None:
            try:
                factors = reduced_family(fact, args.exclude)
            except InvalidTriple as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
    if not verify_factorization(fact).passed:
        print("internal error: factorization failed verification", file=sys.stderr)
        return EXIT_INTERNAL
    render = factors_to_json if args.format == "json" else factors_to_txt
    atomic_write(args.out, render(factors))
    print(f"m={fact.m} factors={len(factors)}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"construct": cmd_construct, "verify": cmd_verify, "factorize": cmd_factorize}[args.command]
    try:
        return handler(args)
    except VerificationFailed as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
