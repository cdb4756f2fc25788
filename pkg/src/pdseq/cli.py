"""Command line: ``pdseq gen | env | classify | spectrum | verify``.

Exit codes: 0 success, 1 verification failure, 2 word is not a factor,
64 usage error. JSON payloads carry no timing; elapsed time goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .envelope import envelope_of
from .errors import ClassificationMismatch, MalformedWord, NotAFactor
from .returns import DEFAULT_TOKENS, classify
from .spectrum import relations_brute, spectrum
from .verify import FAIL, SUITE_NAMES, VerifyLimits, run_suite, write_golden
from .words import Seq, prefix

EXIT_OK, EXIT_FAIL, EXIT_NOT_FACTOR, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _seq(tag: str) -> Seq:
    try:
        return Seq.parse(tag)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _p_range(spec: str) -> tuple[int, int]:
    try:
        if ".." in spec:
            lo, hi = spec.split("..", 1)
            p = (int(lo), int(hi))
        else:
            p = (int(spec), int(spec))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P or P..Q, got {spec!r}") from None
    if not 1 <= p[0] <= p[1]:
        raise argparse.ArgumentTypeError(f"need 1 <= P <= Q, got {spec!r}")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pdseq", description="Return words, envelopes and spectra of the period-doubling sequence.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="print a prefix of D, T1 or T2")
    g.add_argument("--seq", type=_seq, default=Seq.D)
    g.add_argument("--len", dest="length", type=int, required=True)

    e = sub.add_parser("env", parents=[common], help="envelope of a factor and its offset")
    e.add_argument("--seq", type=_seq, default=Seq.D)
    e.add_argument("--word", required=True)

    c = sub.add_parser("classify", parents=[common], help="return word sequence of a factor")
    c.add_argument("--seq", type=_seq, default=Seq.D)
    c.add_argument("--word", required=True)
    c.add_argument("--tokens", type=int, default=DEFAULT_TOKENS)

    s = sub.add_parser("spectrum", parents=[common], help="separated/adjacent/overlapped verdicts for a factor of D")
    s.add_argument("--word", required=True)
    s.add_argument("--p", dest="p_range", type=_p_range, default=(1, 1), metavar="P..Q")

    v = sub.add_parser("verify", parents=[common], help="run check suites")
    v.add_argument("--suite", choices=SUITE_NAMES, default="all")
    v.add_argument("--max-m", type=int)
    v.add_argument("--max-len", type=int)
    v.add_argument("--tokens", type=int)
    v.add_argument("--horizon", type=int)
    v.add_argument("--golden", metavar="DIR", help="also write golden fixture files to DIR")
    return parser


def _emit(args, payload, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=True))
    else:
        for line in text_lines:
            print(line)


def cmd_gen(args) -> int:
    if args.length < 0:
        raise UsageError("--len must be >= 0")
    w = prefix(args.seq, args.length)
    _emit(args, {"seq": args.seq.value, "len": args.length, "prefix": w}, [w])
    return EXIT_OK


def cmd_env(args) -> int:
    fit = envelope_of(args.seq, args.word)
    payload = {"type": fit.env.type, "m": fit.env.m, "offset": fit.offset, "envelope": fit.envelope}
    _emit(args, payload, [f"type={fit.env.type} m={fit.env.m} offset={fit.offset} envelope={fit.envelope}"])
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.tokens < 1:
        raise UsageError("--tokens must be >= 1")
    c = classify(args.seq, args.word, args.tokens)
    payload = {"kind": c.kind.value, "alphabet": c.alphabet, "r0": c.r0, "verified_tokens": c.verified_tokens}
    lines = [f"kind={c.kind.value}", *(f"{x} -> {r}" for x, r in c.alphabet.items()), f"r0={c.r0}",
             f"verified_tokens={c.verified_tokens}"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    lo, hi = args.p_range
    verdicts = spectrum(args.word, lo, hi)
    brute = relations_brute(Seq.D, args.word, hi)
    rows = [
        {
            "p": v.p,
            "relation": v.relation.value,
            "property": v.relation.property_name,
            "theta_letter": v.theta_letter,
            "source": v.source.value,
            "brute_agrees": brute[v.p - 1] is v.relation,
        }
        for v in verdicts
    ]
    _emit(args, rows, [f"p={r['p']} {r['relation']} ({r['property']}) theta={r['theta_letter']} "
                       f"source={r['source']} brute_agrees={r['brute_agrees']}" for r in rows])
    return EXIT_OK if all(r["brute_agrees"] for r in rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    limits = VerifyLimits(max_m=args.max_m, tokens=args.tokens)
    if args.max_len is not None:
        limits.max_len = args.max_len
    if args.horizon is not None:
        limits.horizon = args.horizon
    checks = run_suite(args.suite, limits)
    failed = sum(c.status == FAIL for c in checks)
    payload = {
        "command": {"name": "verify", "suite": args.suite, "max_m": args.max_m, "max_len": args.max_len,
                    "tokens": args.tokens, "horizon": args.horizon},
        "results": {"checks": len(checks), "failed": failed,
                    "skipped": sum(c.status == "skipped" for c in checks)},
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
    }
    lines = [f"{c.status.upper():7} {c.name}  {c.detail}" for c in checks]
    lines.append(f"{len(checks) - failed}/{len(checks)} checks without failure")
    if args.golden:
        for path in write_golden(args.golden, limits):
            lines.append(f"wrote {path}")
    _emit(args, payload, lines)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"gen": cmd_gen, "env": cmd_env, "classify": cmd_classify, "spectrum": cmd_spectrum, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"pdseq: error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    except MalformedWord as exc:
        print(f"pdseq: error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    except NotAFactor as exc:
        print(f"pdseq: {exc}", file=sys.stderr)
        code = EXIT_NOT_FACTOR
    except ClassificationMismatch as exc:
        print(f"pdseq: classification mismatch: {exc}", file=sys.stderr)
        code = EXIT_FAIL
    print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
