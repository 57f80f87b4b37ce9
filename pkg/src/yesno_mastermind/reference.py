"""Ground-truth oracles: direct open-match semantics, transcript replay, and a greedy solver.

Nothing here goes through infoP; replay only uses raw yes/no semantics, so it
checks the solvers' reductions from the outside.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .adversary import enumerate_codes
from .core import (Code, Codemaker, GameParams, InconsistentCodemaker, MastermindError,
                   QueryCounter, Transcript, TooLarge, as_counter)

BRUTE_FORCE_BUDGET = 2 * 10**6
GREEDY_BUDGET = 10**5


class InconsistentPartial(MastermindError, ValueError):
    pass


def open_match_truth(query: Sequence[int], partial: Sequence[int], secret: Sequence[int]) -> bool:
    for i, (x, y) in enumerate(zip(partial, secret), start=1):
        if x and x != y:
            raise InconsistentPartial(f"partial has {x} at position {i}, secret has {y}")
    return any(x == 0 and q == y for q, x, y in zip(query, partial, secret))


def _pairs(transcript: Transcript | Iterable[tuple[Sequence[int], bool]]) -> list[tuple[Code, bool]]:
    if isinstance(transcript, Transcript):
        return [(rec.code, rec.answer) for rec in transcript]
    return [(tuple(code), bool(ans)) for code, ans in transcript]


def replay_consistent(transcript, params: GameParams, limit: int | None = None) -> set[Code]:
    """Every repetition-free code that would have produced exactly these answers.

    Small spaces are filtered by brute force; larger ones go through an exact
    propagate-and-branch search. ``limit`` caps the search: exceeding it
    raises TooLarge instead of returning a partial set.
    """
    pairs = _pairs(transcript)
    if params.space_size() <= BRUTE_FORCE_BUDGET:
        members = enumerate_codes(params, BRUTE_FORCE_BUDGET)
        keep = np.ones(len(members), dtype=bool)
        for code, ans in pairs:
            hit = (members == np.asarray(code)).any(axis=1)
            keep &= hit if ans else ~hit
        out = {tuple(int(c) for c in row) for row in members[keep]}
        if limit is not None and len(out) > limit:
            raise TooLarge(len(out), limit)
        return out
    return _search_consistent(pairs, params, limit)


def _search_consistent(pairs, params: GameParams, limit: int | None) -> set[Code]:
    n, k = params.n, params.k
    allowed = np.ones((n, k + 1), dtype=bool)
    allowed[:, 0] = False
    rows = np.arange(n)
    clauses = []
    for code, ans in pairs:
        if ans:
            clauses.append(code)
        else:
            allowed[rows, np.asarray(code)] = False
    clause_arr = np.asarray(clauses, dtype=np.int64).reshape(len(clauses), n)

    found: set[Code] = set()
    stack = [allowed]
    while stack:
        dom = _propagate(stack.pop(), clause_arr, k == n)
        if dom is None:
            continue
        sizes = dom.sum(axis=1)
        if (sizes == 1).all():
            found.add(tuple(int(c) for c in dom.argmax(axis=1)))
            if limit is not None and len(found) > limit:
                raise TooLarge(len(found), limit)
            continue
        i = int(np.where(sizes > 1, sizes, k + 2).argmin())
        for c in np.flatnonzero(dom[i])[::-1]:
            child = dom.copy()
            child[i] = False
            child[i, c] = True
            stack.append(child)
    return found


def _propagate(dom: np.ndarray, clauses: np.ndarray, perm: bool) -> np.ndarray | None:
    """Shrink domains to a fixpoint; None on contradiction."""
    n = dom.shape[0]
    rows = np.arange(n)
    while True:
        before = int(dom.sum())
        sizes = dom.sum(axis=1)
        if (sizes == 0).any():
            return None
        assigned = np.where(sizes == 1, dom.argmax(axis=1), 0)
        # all-different: an assigned color is unavailable elsewhere
        taken = assigned[assigned > 0]
        if len(np.unique(taken)) != len(taken):
            return None
        if len(taken):
            owner = np.zeros(dom.shape[1], dtype=np.int64) - 1
            owner[assigned[assigned > 0]] = rows[assigned > 0]
            mask = np.zeros_like(dom)
            mask[:, taken] = True
            mask[owner[taken], taken] = False
            dom &= ~mask
        if perm:
            counts = dom.sum(axis=0)[1:]
            if (counts == 0).any():
                return None
            for c in np.flatnonzero(counts == 1) + 1:
                i = int(dom[:, c].argmax())
                if dom[i].sum() > 1:
                    dom[i] = False
                    dom[i, c] = True
        if len(clauses):
            alive = dom[rows, clauses]  # (m, n)
            sizes = dom.sum(axis=1)
            assigned = np.where(sizes == 1, dom.argmax(axis=1), 0)
            satisfied = (clauses == assigned).any(axis=1)
            live = alive.sum(axis=1)
            if ((live == 0) & ~satisfied).any():
                return None
            for ci in np.flatnonzero((live == 1) & ~satisfied):
                i = int(alive[ci].argmax())
                c = clauses[ci, i]
                dom[i] = False
                dom[i, c] = True
        if int(dom.sum()) == before:
            return dom


def greedy_small_solve(codemaker: Codemaker | QueryCounter, params: GameParams,
                       budget: int = GREEDY_BUDGET) -> tuple[Code, Transcript]:
    """Ask the repetition-free query that splits the consistent set most evenly, until one code is left."""
    counter = as_counter(codemaker, params)
    queries = enumerate_codes(params, budget)
    members = queries.copy()
    while len(members) > 1:
        yes = _yes_counts(members, queries, params.k)
        worst = np.maximum(yes, len(members) - yes)
        best = int(worst.argmin())  # first minimum is the lexicographically smallest query
        if worst[best] == len(members):
            raise InconsistentCodemaker("no query separates the remaining candidates")
        q = queries[best]
        ans = counter.ask(tuple(int(c) for c in q), "findnext")
        hit = (members == q).any(axis=1)
        members = members[hit] if ans else members[~hit]
    if len(members) == 0:
        raise InconsistentCodemaker("answers admit no repetition-free secret")
    return tuple(int(c) for c in members[0]), counter.transcript


def _yes_counts(members: np.ndarray, queries: np.ndarray, k: int, chunk: int = 1024) -> np.ndarray:
    """For every query, how many members share at least one position with it (bitset popcounts)."""
    size, n = members.shape
    eq = members.T[:, None, :] == np.arange(k + 1)[None, :, None]  # (n, k+1, size)
    packed = np.packbits(eq, axis=2)
    pad = (-packed.shape[2]) % 8
    if pad:
        packed = np.pad(packed, ((0, 0), (0, 0), (0, pad)))
    bits = packed.view(np.uint64)  # (n, k+1, words)
    rows = np.arange(n)
    out = np.empty(len(queries), dtype=np.int64)
    for start in range(0, len(queries), chunk):
        qs = queries[start:start + chunk]
        union = np.bitwise_or.reduce(bits[rows, qs], axis=1)
        out[start:start + chunk] = np.bitwise_count(union).sum(axis=1)
    return out
