"""Command line front end.

    congrlat check     "2x + 7y - 6z = -3 (mod 4)"
    congrlat count     "2x - 2y = 6 (mod 4)"
    congrlat solve     "x + y + z = 0 (mod 2)" "-y + z = 1 (mod 3)"
    congrlat enumerate --json -f system.txt
    congrlat verify    --random 500 --seed 42

Each positional argument is one line of input; with none, ``-f FILE`` or
stdin is read. A single line is treated as one congruence, several lines as a
system.

Exit codes: 0 success, 1 no solutions (solve/enumerate), 2 usage or parse
error, 3 capacity exceeded, 4 verify mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import congruence as cg
from . import system as cs
from .congruence import DEFAULT_CAP, LinearCongruence
from .errors import CapacityError, UsageError
from .intlinalg import lcm_vec
from .oracle import brute_force, brute_force_system
from .parse import ParsedInput, parse_system
from .system import CongruenceSystem

EXIT_OK = 0
EXIT_UNSOLVABLE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_MISMATCH = 4

CAP_ENV = "CONGRLAT_CAP"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV} must be positive")
    return cap


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="congrlat", description="Solve linear congruences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    for name, help_ in [
        ("check", "decide solvability"),
        ("count", "count distinct solutions"),
        ("solve", "print the parametric general solution"),
        ("enumerate", "list every distinct solution"),
        ("verify", "compare the solver against brute force"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("lines", nargs="*", help="congruences, one per argument")
        p.add_argument("-f", "--file", help="read input from FILE ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--cap", type=int, default=None, help="enumeration cap")
        if name == "verify":
            p.add_argument("--random", type=int, default=None, metavar="N",
                           help="check N random instances instead of the input")
            p.add_argument("--seed", type=int, default=0)
    return parser


def _read_input(args) -> ParsedInput:
    if args.lines:
        text = "\n".join(args.lines)
    elif args.file and args.file != "-":
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {args.file}: {e.strerror}") from None
    else:
        text = sys.stdin.read()
    return parse_system(text)


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def _single(parsed: ParsedInput) -> Optional[LinearCongruence]:
    return parsed.system.rows[0] if len(parsed.system.rows) == 1 else None


def cmd_check(parsed: ParsedInput, args, out) -> int:
    row = _single(parsed)
    if row is not None:
        preds = {"single-congruence": cg.is_solvable(row)}
    else:
        preds = cs.which_predicates(parsed.system)
    solvable = all(preds.values()) if row is not None else preds["integer-system"]
    if args.json:
        _emit_json({"solvable": solvable, "predicates": preds}, out)
    else:
        out.write(f"solvable: {'yes' if solvable else 'no'}\n")
        for name, verdict in preds.items():
            out.write(f"  {name}: {'yes' if verdict else 'no'}\n")
    return EXIT_OK


def cmd_count(parsed: ParsedInput, args, out) -> int:
    row = _single(parsed)
    if row is not None:
        count = cg.count_solutions(row)
        modulus = abs(row.modulus)
    else:
        count = cs.count_system(parsed.system)
        modulus = lcm_vec(parsed.system.moduli)
    if args.json:
        value = "infinite" if count.kind == "infinite" else count.value
        _emit_json({"modulus": modulus, "variables": list(parsed.variables),
                    "count": value, "solutions": None}, out)
    else:
        out.write(f"{count}\n")
    return EXIT_OK


def _parametric(parsed: ParsedInput):
    row = _single(parsed)
    if row is not None:
        return cg.general_solution(row)
    return cs.system_parametric(parsed.system)


def cmd_solve(parsed: ParsedInput, args, out) -> int:
    param = _parametric(parsed)
    if param is None:
        sys.stderr.write("no solutions\n")
        return EXIT_UNSOLVABLE
    if args.json:
        _emit_json({"modulus": param.modulus, "variables": list(parsed.variables),
                    "offset": list(param.offset),
                    "basis": [list(r) for r in param.basis],
                    "param_ranges": list(param.param_ranges)}, out)
    else:
        for line in param.render(parsed.variables):
            out.write(line + "\n")
    return EXIT_OK


def _enumerate(parsed: ParsedInput, cap: int) -> cg.SolutionSet:
    row = _single(parsed)
    if row is not None:
        return cg.enumerate_solutions(row, cap)
    result = cs.solve_system(parsed.system, cap)
    if result is None:
        return cg.SolutionSet(lcm_vec(parsed.system.moduli), parsed.system.arity)
    return result.set


def cmd_enumerate(parsed: ParsedInput, args, out) -> int:
    sols = _enumerate(parsed, args.cap)
    if args.json:
        _emit_json({"modulus": sols.modulus, "variables": list(parsed.variables),
                    "count": len(sols), "solutions": [list(v) for v in sols]}, out)
    else:
        for v in sols:
            out.write(" ".join(map(str, v)) + "\n")
    if not len(sols):
        sys.stderr.write("no solutions\n")
        return EXIT_UNSOLVABLE
    return EXIT_OK


def _oracle(parsed: ParsedInput) -> cg.SolutionSet:
    row = _single(parsed)
    if row is not None:
        return brute_force(row).set
    return brute_force_system(parsed.system).set


def _random_congruence(rng: random.Random) -> LinearCongruence:
    n = rng.randint(1, 3)
    return LinearCongruence(
        tuple(rng.randint(-20, 20) for _ in range(n)), rng.randint(-20, 20), rng.randint(1, 12)
    )


def _random_system(rng: random.Random) -> CongruenceSystem:
    n = rng.randint(1, 3)
    rows = [
        LinearCongruence(tuple(rng.randint(-10, 10) for _ in range(n)),
                         rng.randint(-10, 10), rng.randint(2, 6))
        for _ in range(rng.randint(1, 2))
    ]
    return CongruenceSystem.from_rows(rows)


def cmd_verify(args, out) -> int:
    from .parse import render_system

    cases: list[ParsedInput] = []
    if args.random is not None:
        if args.random < 0:
            raise UsageError("--random must be non-negative")
        rng = random.Random(args.seed)
        for i in range(args.random):
            if i % 2 == 0:
                s = CongruenceSystem.from_rows([_random_congruence(rng)])
            else:
                s = _random_system(rng)
            cases.append(ParsedInput(s.variables, s, ()))
    else:
        cases.append(_read_input(args))

    mismatches = 0
    for case in cases:
        got = _enumerate(case, args.cap)
        want = _oracle(case)
        if got.as_set() != want.as_set() or got.modulus != want.modulus:
            mismatches += 1
            missing = sorted(want.as_set() - got.as_set())
            extra = sorted(got.as_set() - want.as_set())
            out.write("MISMATCH\n" + render_system(case.system))
            out.write(f"  missing: {missing}\n  extra: {extra}\n")
    out.write(f"checked {len(cases)} instance(s), {mismatches} mismatch(es)\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "count": cmd_count,
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.cap is None:
            args.cap = _default_cap()
        if args.cap < 1:
            raise UsageError("--cap must be positive")
        if args.command == "verify":
            return cmd_verify(args, out)
        return COMMANDS[args.command](_read_input(args), args, out)
    except CapacityError as e:
        sys.stderr.write(f"congrlat: {e}\n")
        return EXIT_CAPACITY
    except UsageError as e:
        sys.stderr.write(f"congrlat: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
