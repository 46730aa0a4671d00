"""Command line interface: ``permstat <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds counterexamples and 2 on
usage errors (bad permutations, patterns, names or sizes).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bijections import MAPS, apply_map, rho_trace
from .harness import DEFAULT_N, PROPERTIES, distribution, export_table, resolve_jobs, verify
from .labeling import Scheme, code_of, decode, make_labeling
from .patterns import count_occurrences, parse_pattern
from .perm import STAT_NAMES, Permutation, stat_vector


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_stats(args) -> int:
    print(json.dumps(stat_vector(_perm(args.perm)).as_dict()))
    return 0


def _cmd_label(args) -> int:
    print(make_labeling(args.scheme, _perm(args.perm)).render())
    return 0


def _cmd_code(args) -> int:
    print(code_of(args.scheme, _perm(args.perm)))
    return 0


def _cmd_decode(args) -> int:
    try:
        print(decode(args.scheme, args.word))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def _trace_lines(name: str, perm: Permutation) -> list[str]:
    if name == "rho":
        rows = [(step.i, step.digit, step.labeling.render()) for step in rho_trace(perm)]
        header = ("i", "s_i", "sigma^(i)")
    elif name == "carlitz":
        from .labeling import _insert

        digits = code_of(Scheme.INV, perm).digits
        w: tuple[int, ...] = (1,)
        rows = [(1, 0, make_labeling(Scheme.MAJ, w).render())]
        for i in range(2, perm.n + 1):
            w = _insert(Scheme.MAJ, digits[i - 1], w)
            rows.append((i, digits[i - 1], make_labeling(Scheme.MAJ, w).render()))
        header = ("i", "c_i", "sigma^(i)")
    else:
        n, k = perm.n, perm.letters[0]
        out = apply_map(name, perm).output.letters
        rows = [(1, k, out[0])] + [(i, perm.letters[n + 1 - i], out[i - 1]) for i in range(2, n + 1)]
        header = ("i", "pi(n+2-i)", "pi'(i)")
    return ["\t".join(header)] + ["\t".join(map(str, row)) for row in rows]


def _cmd_apply(args) -> int:
    perm = _perm(args.perm)
    print(apply_map(args.map, perm).output)
    if args.trace:
        print("\n".join(_trace_lines(args.map, perm)))
    return 0


def _cmd_count(args) -> int:
    try:
        pattern = parse_pattern(args.pattern)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(count_occurrences(pattern, _perm(args.perm).letters))
    return 0


def _cmd_dist(args) -> int:
    names = [s.strip() for s in args.stats.split(",") if s.strip()]
    try:
        table = distribution(names, args.n, jobs=resolve_jobs(args.jobs), force=args.force)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = export_table(table, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    return 0


def _cmd_verify(args) -> int:
    try:
        report = verify(args.property, args.n, jobs=resolve_jobs(args.jobs), force=args.force)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps(report.as_dict()))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permstat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    schemes = [s.value for s in Scheme]

    p = sub.add_parser("stats", help="statistic vector of a permutation as JSON")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("label", help="insertion labeling of a permutation")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("perm")
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("code", help="code word (inversion / major index / stat table)")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("perm")
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("decode", help="permutation with the given code word")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("word")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("apply", help="apply rho, carlitz or burstein")
    p.add_argument("--map", choices=sorted(MAPS), required=True)
    p.add_argument("--trace", action="store_true", help="print the step table")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("count", help="occurrences of a dashed pattern")
    p.add_argument("pattern")
    p.add_argument("perm")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("dist", help="joint distribution over S_n")
    p.add_argument("--stats", required=True, help=f"comma list from {','.join(STAT_NAMES)}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int)
    p.add_argument("--force", action="store_true", help="allow n = 10")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("verify", help="exhaustive property check")
    p.add_argument("--property", choices=sorted(PROPERTIES), required=True)
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument("--jobs", type=int)
    p.add_argument("--force", action="store_true", help="allow n = 10")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"permstat {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
