"""A codemaker that never commits: it keeps the larger half of the still-possible secrets."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Code, GameParams, InvalidCode, TooLarge

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class CandidateSet:
    members: np.ndarray  # shape (size, n), rows in lexicographic order
    k: int
    round: int = 0

    def __len__(self) -> int:
        return int(self.members.shape[0])

    def codes(self) -> list[Code]:
        return [tuple(int(c) for c in row) for row in self.members]

    def __contains__(self, code) -> bool:
        return bool((self.members == np.asarray(code)).all(axis=1).any())


def enumerate_codes(params: GameParams, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    size = params.space_size()
    if size > budget:
        raise TooLarge(size, budget)
    rows = itertools.chain.from_iterable(
        itertools.permutations(range(1, params.k + 1), params.n))
    dtype = np.int16 if params.k < 2**15 else np.int32
    return np.fromiter(rows, dtype=dtype, count=size * params.n).reshape(size, params.n)


def init_candidates(params: GameParams, budget: int = DEFAULT_BUDGET) -> CandidateSet:
    return CandidateSet(enumerate_codes(params, budget), params.k)


def _check_query(query: Sequence[int], n: int, k: int) -> np.ndarray:
    # repeated colors are allowed here: the lower bound holds for them too
    q = np.asarray(query, dtype=np.int64)
    if q.shape != (n,):
        raise InvalidCode(f"query must have {n} entries")
    if q.min() < 1 or q.max() > k:
        raise InvalidCode(f"query colors must lie in [1, {k}]")
    return q


def adversary_answer(cands: CandidateSet, query: Sequence[int]) -> tuple[bool, CandidateSet]:
    members = cands.members
    q = _check_query(query, members.shape[1], cands.k)
    hit = (members == q).any(axis=1)
    yes = int(hit.sum())
    # ties go to yes
    if yes >= len(cands) - yes:
        return True, CandidateSet(members[hit], cands.k, cands.round + 1)
    return False, CandidateSet(members[~hit], cands.k, cands.round + 1)


def restrict(cands: CandidateSet, query: Sequence[int], ans: bool) -> CandidateSet:
    """The members that would have given answer ``ans`` to ``query``."""
    hit = (cands.members == _check_query(query, cands.members.shape[1], cands.k)).any(axis=1)
    return CandidateSet(cands.members[hit if ans else ~hit], cands.k, cands.round + 1)


def adversary_final(cands: CandidateSet, announced: Sequence[int] | None = None) -> Code:
    """Reveal a secret consistent with everything said; dodge the announced guess if possible."""
    codes = cands.codes()
    if not codes:
        raise ValueError("empty candidate set")
    if announced is not None:
        announced = tuple(announced)
        for code in codes:
            if code != announced:
                return code
    return codes[0]


def min_queries_certificate(params: GameParams) -> float:
    return math.log2(params.space_size())


class AdversaryCodemaker:
    """Codemaker interface around the majority split, with an audit trail of set sizes."""

    def __init__(self, params: GameParams, budget: int = DEFAULT_BUDGET):
        self.params = params
        self.candidates = init_candidates(params, budget)
        self.sizes = [len(self.candidates)]
        self.answers: list[tuple[Code, bool]] = []
        self.resolved_at: int | None = 0 if len(self.candidates) == 1 else None

    def answer(self, query: Sequence[int]) -> bool:
        ans, self.candidates = adversary_answer(self.candidates, query)
        self.sizes.append(len(self.candidates))
        self.answers.append((tuple(int(c) for c in query), ans))
        if self.resolved_at is None and len(self.candidates) == 1:
            self.resolved_at = len(self.answers)
        return ans

    def halving_holds(self) -> bool:
        return all(before <= 2 * after for before, after in zip(self.sizes, self.sizes[1:]))

    def reveal(self, announced: Sequence[int] | None = None) -> Code:
        return adversary_final(self.candidates, announced)
