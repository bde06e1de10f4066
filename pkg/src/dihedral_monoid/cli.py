"""Command-line front end.

    dihedral-monoid --n 4 --k 3 nf "2 3 4 1"
    dihedral-monoid --n 4 --k 3 eq "1 2 3 4" "4 3 2 1"
    dihedral-monoid --n 4 --k 3 verify --suite all

Exit codes: 0 success, 1 verification failure, 2 invalid input or an
oracle limit that would otherwise truncate the answer.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import oracle
from .lang import count_sequence, dfa_to_dot, dfa_to_json, growth_series, irreducible_dfa, theorem_language_dfa
from .lang.automata import StateLimitExceeded
from .presentation import InvalidWord, Presentation, PresentationError, new_presentation, sorted_length_lex
from .rewrite import decompose, normal_form
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits on its own; route through our exit-code handling instead
    def error(self, message):
        raise UsageError(message)


def parse_word(p: Presentation, text: str) -> tuple[int, ...]:
    """Whitespace-separated integers or ``a3``-style tokens."""
    out = []
    for tok in text.replace(",", " ").split():
        body = tok[1:] if tok[:1] in ("a", "A") else tok
        try:
            out.append(int(body))
        except ValueError:
            raise InvalidWord(f"malformed letter {tok!r}") from None
    return p.check_word(out)


def fmt(w: Sequence[int]) -> str:
    return " ".join(map(str, w))


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dihedral-monoid", description="Normal forms in the monoids S_n(H) of dihedral type.")
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--k", type=int, required=True)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("nf", help="normal form and its decomposition")
    s.add_argument("word")
    s = sub.add_parser("eq", help="decide equality of two words")
    s.add_argument("word1")
    s.add_argument("word2")
    sub.add_parser("relations", help="the 2n relation words")
    s = sub.add_parser("orbit", help="congruence class by brute force")
    s.add_argument("word")
    s.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    for name in ("count", "growth"):
        s = sub.add_parser(name)
        s.add_argument("--max-len", type=int, required=True)
    s = sub.add_parser("dfa", help="export a normal-word automaton")
    s.add_argument("--which", choices=("irreducible", "theorem"), default="irreducible")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s = sub.add_parser("verify", help="run property suites")
    s.add_argument("--suite", default="all", help="suite name or 'all' (%s)" % ", ".join(SUITES))
    s.add_argument("--max-len", type=int)
    s.add_argument("--max-q", type=int)
    s.add_argument("--max-v", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--json", action="store_true", help="print full JSON reports")
    return ap


def _counts(p: Presentation, max_len: int, out) -> list[int]:
    if max_len < 0:
        raise UsageError("--max-len must be >= 0")
    counts = count_sequence(irreducible_dfa(p), max_len)
    out.write("length,count\n")
    for ell, c in enumerate(counts):
        out.write(f"{ell},{c}\n")
    return counts


def _dispatch(args, p: Presentation, out) -> int:
    cmd = args.command
    if cmd == "nf":
        w = parse_word(p, args.word)
        nf = normal_form(p, w)
        d = decompose(p, nf)
        out.write(f"{fmt(nf)}\ni={d.i} j={d.j} b={fmt(d.b)}\n")
    elif cmd == "eq":
        w1, w2 = parse_word(p, args.word1), parse_word(p, args.word2)
        out.write("equal\n" if normal_form(p, w1) == normal_form(p, w2) else "not-equal\n")
    elif cmd == "relations":
        for r in sorted_length_lex(p.relation_set):
            out.write(fmt(r) + "\n")
    elif cmd == "orbit":
        cls = oracle.congruence_class(p, parse_word(p, args.word), args.cap)
        if cls.truncated:
            raise oracle.BudgetExceeded(f"congruence class exceeds --cap {args.cap}; raise the cap")
        for m in cls.sorted_members():
            out.write(fmt(m) + "\n")
    elif cmd == "count":
        _counts(p, args.max_len, out)
    elif cmd == "growth":
        if args.max_len < 0:
            raise UsageError("--max-len must be >= 0")
        g = growth_series(irreducible_dfa(p), args.max_len)
        out.write("length,count\n")
        for ell, c in enumerate(g.coefficients):
            out.write(f"{ell},{c}\n")
        out.write("num: " + fmt(g.numerator) + "\n")
        out.write("den: " + fmt(g.denominator) + "\n")
    elif cmd == "dfa":
        A = irreducible_dfa(p) if args.which == "irreducible" else theorem_language_dfa(p)
        export = dfa_to_json if args.format == "json" else dfa_to_dot
        out.write(export(A, p.n, p.k, args.which))
    elif cmd == "verify":
        names = SUITES if args.suite == "all" else (args.suite,)
        if any(name not in SUITES for name in names):
            raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
        bounds = {
            "max_len": args.max_len,
            "max_q": args.max_q,
            "max_v": args.max_v,
            "sample_count": args.samples,
            "seed": args.seed,
        }
        failed = False
        for name in names:
            rep = run_suite(p, name, bounds)
            out.write((rep.to_json() if args.json else rep.summary()) + "\n")
            if not args.json:
                for what, expected, actual in rep.failures:
                    out.write(f"  failure: {what}: expected {expected}, got {actual}\n")
            failed |= not rep.passed
        return EXIT_FAIL if failed else EXIT_OK
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        p = new_presentation(args.n, args.k)
        return _dispatch(args, p, out)
    except (UsageError, PresentationError, InvalidWord) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    except (oracle.BudgetExceeded, oracle.Inconclusive, StateLimitExceeded) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
