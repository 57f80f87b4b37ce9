"""Command-line entry point: solve, bench, adversary, play, verify.

Exit codes: 0 success, 1 solve or verification failure, 2 usage error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence, TextIO

from . import break_code
from .adversary import DEFAULT_BUDGET, AdversaryCodemaker, init_candidates, restrict
from .bench import (parse_n_range, rows_to_csv, rows_to_json_lines, run_bench,
                    transcript_to_text)
from .core import (Code, GameParams, HonestCodemaker, InvalidCode, MastermindError,
                   TooLarge, TooSmall, accounting_bound, format_code, info, lower_bound,
                   parse_code, upper_bound)
from .reference import greedy_small_solve, replay_consistent
from .rng import secret_for_seed
from .solver_general import solve_general
from .solver_perm import solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _params(args) -> GameParams:
    k = args.k if args.k is not None else args.n
    try:
        return GameParams(args.n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _solver(name: str | None, params: GameParams):
    if name is None:
        return break_code
    if name == "perm":
        if params.k != params.n:
            raise UsageError("--solver perm needs k = n")
        return solve
    if name == "general":
        if params.k <= params.n:
            raise UsageError("--solver general needs k > n")
        return solve_general
    return greedy_small_solve


def _bound_lines(params: GameParams) -> list[str]:
    lines = [f"lower bound (sum log2 j): {lower_bound(params):.4f}"]
    try:
        lines.append(f"theorem upper bound: {upper_bound(params):.4f}")
    except TooSmall:
        lines.append("theorem upper bound: n/a (n < 4)")
    lines.append(f"accounting bound: {accounting_bound(params)}")
    return lines


def cmd_solve(args, out: TextIO) -> int:
    params = _params(args)
    if args.secret is not None:
        try:
            secret = parse_code(args.secret, params)
        except InvalidCode as exc:
            raise UsageError(str(exc)) from exc
    elif args.seed is not None:
        secret = secret_for_seed(params, args.seed)
    else:
        raise UsageError("solve needs --secret or --seed")
    found, transcript = _solver(args.solver, params)(HonestCodemaker(secret), params)
    print(f"secret: {format_code(secret)}", file=out)
    print(f"found:  {format_code(found)}", file=out)
    print(f"queries: {len(transcript)}", file=out)
    for line in _bound_lines(params):
        print(line, file=out)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(transcript_to_text(transcript, params, found))
    return EXIT_OK if found == secret else EXIT_FAIL


def cmd_bench(args, out: TextIO) -> int:
    try:
        ns = parse_n_range(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    k_rule = args.k if args.k is not None else "n"
    try:
        rows = run_bench(ns, k_rule, args.trials, args.seed or 0, args.exhaustive)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = rows_to_json_lines(rows) if args.format == "json-lines" else rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    failed = False
    for row in rows:
        for warning in row.warnings():
            print(f"note: {warning}", file=sys.stderr)
        failed |= row.max_q > row.bound_accounting
    return EXIT_FAIL if failed else EXIT_OK


def cmd_adversary(args, out: TextIO) -> int:
    params = _params(args)
    adv = AdversaryCodemaker(params)
    found, transcript = _solver(args.solver, params)(adv, params)
    secret = adv.reveal(found)
    floor = math.ceil(lower_bound(params) - 1e-9)
    replay = replay_consistent(transcript, params)
    checks = {
        "forced": adv.resolved_at is not None and adv.resolved_at >= floor,
        "halving": adv.halving_holds(),
        "replay": replay == {secret},
        "correct": found == secret,
    }
    print(f"queries issued: {len(transcript)}", file=out)
    print(f"queries until one candidate left: {adv.resolved_at}", file=out)
    print(f"forced minimum ceil(log2 |M0|): {floor}", file=out)
    print(f"candidate set sizes: {' '.join(str(s) for s in adv.sizes)}", file=out)
    print(f"halving invariant: {'ok' if checks['halving'] else 'BROKEN'}", file=out)
    print(f"revealed secret: {format_code(secret)}", file=out)
    print(f"replay consistent set size: {len(replay)}", file=out)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(transcript_to_text(transcript, params, secret))
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


class Aborted(Exception):
    pass


class Cheated(Exception):
    pass


class HumanCodemaker:
    """Reads y/n answers; tracks the consistent set while it fits in memory."""

    def __init__(self, params: GameParams, inp: TextIO, out: TextIO, budget: int = DEFAULT_BUDGET):
        self.params = params
        self.inp, self.out = inp, out
        self.asked = 0
        try:
            self.candidates = init_candidates(params, budget)
        except TooLarge:
            self.candidates = None
            print("(candidate tracking off: too many codes; the final claim is checked instead)",
                  file=out)

    def answer(self, query: Code) -> bool:
        self.asked += 1
        while True:
            print(f"query {self.asked}: {format_code(query)}  any correct position? [y/n] ",
                  end="", file=self.out, flush=True)
            line = self.inp.readline()
            if not line:
                raise Aborted
            reply = line.strip().lower()
            if reply in ("y", "yes", "n", "no"):
                break
            print("please answer y or n", file=self.out)
        ans = reply.startswith("y")
        if self.candidates is not None:
            self.candidates = restrict(self.candidates, query, ans)
            left = len(self.candidates)
            print(f"  consistent codes left: {left}", file=self.out)
            if left == 0:
                raise Cheated
        return ans


def cmd_play(args, out: TextIO, inp: TextIO | None = None) -> int:
    params = _params(args)
    inp = inp if inp is not None else sys.stdin
    human = HumanCodemaker(params, inp, out)
    print(f"think of {params.n} distinct colors from 1..{params.k}; answer y if the query "
          "matches your code in at least one position", file=out)
    try:
        found, transcript = _solver(args.solver, params)(human, params)
    except Aborted:
        print("\ninput closed; game aborted", file=out)
        return EXIT_FAIL
    except (Cheated, MastermindError, AssertionError):
        # a lying human can trip any solver-side consistency check
        print("you have cheated: no code is consistent with your answers", file=out)
        return EXIT_FAIL
    if any(info(rec.code, found) != rec.answer for rec in transcript):
        print("you have cheated: no code is consistent with your answers", file=out)
        return EXIT_FAIL
    print(f"your secret is {format_code(found)} ({len(transcript)} queries)", file=out)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    from .verify import run_checks

    failed = 0
    for name, ok, detail in run_checks():
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}", file=out, flush=True)
        failed += not ok
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yesno-mm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def game_args(p, n_type=int):
        p.add_argument("--n", type=n_type, required=True, help="number of positions")
        p.add_argument("--k", default=None, help="number of colors (default: n)")
        p.add_argument("--solver", choices=["perm", "general", "greedy"], default=None)
        p.add_argument("--out", help="write the transcript / report to this path")

    p = sub.add_parser("solve", help="break one secret")
    game_args(p)
    p.add_argument("--secret", help="comma-separated code, e.g. 9,10,6,8,4,2,7,5,1,3")
    p.add_argument("--seed", type=int, help="draw the secret from this seed")
    p.set_defaults(func=cmd_solve, k_int=True)

    p = sub.add_parser("bench", help="query-count statistics against the bounds")
    p.add_argument("--n", required=True, help="n values: 8, 4-7 or 8,16,32")
    p.add_argument("--k", default=None, help="k rule: n, 2n, n+8 or a number (default: n)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="every secret (n <= 7)")
    p.add_argument("--format", choices=["csv", "json-lines"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench, k_int=False)

    p = sub.add_parser("adversary", help="play a solver against the cheating codemaker")
    game_args(p)
    p.set_defaults(func=cmd_adversary, k_int=True)

    p = sub.add_parser("play", help="you are the codemaker")
    game_args(p)
    p.set_defaults(func=cmd_play, k_int=True)

    p = sub.add_parser("verify", help="run the built-in property checks")
    p.set_defaults(func=cmd_verify, k_int=False)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "k_int", False) and args.k is not None:
            try:
                args.k = int(args.k)
            except ValueError:
                raise UsageError(f"--k must be an integer, got {args.k!r}") from None
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
