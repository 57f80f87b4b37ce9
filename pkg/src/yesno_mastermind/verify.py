"""Desk-scale self-check run by ``yesno-mm verify``."""

from __future__ import annotations

import itertools
import math
from typing import Callable, Iterator

from . import break_code
from .adversary import AdversaryCodemaker
from .core import GameParams, HonestCodemaker, QueryCounter, accounting_bound, info, shift_query
from .infop import info_p
from .reference import greedy_small_solve, open_match_truth, replay_consistent
from .solver_perm import solve


def check_infop_equivalence(n: int = 4) -> tuple[bool, str]:
    params = GameParams(n, n)
    codes = list(itertools.permutations(range(1, n + 1)))
    calls = 0
    for y in codes:
        for mask in range(1 << n):
            x = tuple(y[i] if mask >> i & 1 else 0 for i in range(n))
            for q in codes:
                counter = QueryCounter(HonestCodemaker(y), params)
                got = info_p(q, x, counter)
                if got != open_match_truth(q, x, y):
                    return False, f"mismatch y={y} x={x} q={q}"
                calls += 1
    return True, f"{calls} (secret, partial, query) triples at n={n}"


def check_solver_exhaustive(n: int, k: int) -> tuple[bool, str]:
    params = GameParams(n, k)
    worst = 0
    for y in itertools.permutations(range(1, k + 1), n):
        out, transcript = break_code(HonestCodemaker(y), params)
        if out != y:
            return False, f"secret {y} answered with {out}"
        worst = max(worst, len(transcript))
    bound = accounting_bound(params)
    return worst <= bound, f"max {worst} queries, accounting bound {bound}"


def check_replay_singleton(n: int, k: int, secrets: int = 20) -> tuple[bool, str]:
    params = GameParams(n, k)
    for y in itertools.islice(itertools.permutations(range(1, k + 1), n), 0, None, 7):
        out, transcript = break_code(HonestCodemaker(y), params)
        if replay_consistent(transcript, params) != {out}:
            return False, f"replay of {y} is not the singleton {{{out}}}"
        secrets -= 1
        if secrets == 0:
            break
    return True, "replay leaves exactly the solver's output"


def check_adversary(n: int) -> tuple[bool, str]:
    params = GameParams(n, n)
    floor = math.ceil(math.log2(math.factorial(n)) - 1e-12)
    for name, fn in (("perm", solve), ("greedy", greedy_small_solve)):
        adv = AdversaryCodemaker(params)
        out, transcript = fn(adv, params)
        secret = adv.reveal()
        if not adv.halving_holds():
            return False, f"{name}: halving invariant broken"
        if adv.resolved_at is None or adv.resolved_at < floor:
            return False, f"{name}: resolved after {adv.resolved_at} queries, floor {floor}"
        if any(info(rec.code, secret) != rec.answer for rec in transcript) or out != secret:
            return False, f"{name}: revealed secret does not replay"
    return True, f"n={n}: both solvers need >= {floor} queries"


def check_shift_family(n: int = 6, k: int = 9) -> tuple[bool, str]:
    params = GameParams(n, k)
    cols = list(zip(*(shift_query(j, params) for j in range(1, k + 1))))
    ok = all(sorted(col) == list(range(1, k + 1)) for col in cols)
    return ok, "every color once per position"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("shift family completeness", check_shift_family),
    ("infoP equals open-match truth", check_infop_equivalence),
    ("k=n solver exhaustive n=4", lambda: check_solver_exhaustive(4, 4)),
    ("k=n solver exhaustive n=5", lambda: check_solver_exhaustive(5, 5)),
    ("k>n solver exhaustive (3,5)", lambda: check_solver_exhaustive(3, 5)),
    ("k>n solver exhaustive (4,6)", lambda: check_solver_exhaustive(4, 6)),
    ("replay singleton n=5", lambda: check_replay_singleton(5, 5)),
    ("replay singleton (4,6)", lambda: check_replay_singleton(4, 6)),
    ("adversary forcing n=4", lambda: check_adversary(4)),
    ("adversary forcing n=6", lambda: check_adversary(6)),
]


def run_checks() -> Iterator[tuple[str, bool, str]]:
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, reported like one
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield name, ok, detail
