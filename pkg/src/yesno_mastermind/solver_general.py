"""Codebreaker for k > n: no pivot color needed, since spare colors make prefix mixing safe."""

from __future__ import annotations

from .core import (Code, Codemaker, GameParams, InconsistentCodemaker, PreconditionError,
                   QueryCounter, Transcript, as_counter)
from .solver_perm import SolverState, _active, initial_phase


def initial_phase_general(codemaker: Codemaker | QueryCounter, params: GameParams) -> list[bool]:
    if params.k <= params.n:
        raise PreconditionError("initial_phase_general needs k > n")
    v = initial_phase(codemaker, params)
    misses = v.count(False)
    # every color sits at every position in exactly one shift, so at most n shifts can match
    if misses < params.k - params.n:
        raise InconsistentCodemaker(
            f"only {misses} initial queries answered no, at least {params.k - params.n} must")
    return v


def find_next_general(state: SolverState, j: int) -> int:
    """Rightmost open position where σ^j is correct, by mixing in a prefix of σ^r."""
    n, k = state.params.n, state.params.k
    if not state.v[j - 1] or state.v[j % k]:
        raise PreconditionError(f"index {j} is not active")
    r = j % k + 1
    sj, sr = state.shift(j), state.shift(r)

    a, b = 1, n
    while b > a:
        l = (a + b + 1) // 2
        probe = sr[:l - 1] + sj[l - 1:]
        if len(set(probe)) != n:
            raise AssertionError(f"prefix-mix probe {probe} repeats a color")
        if state.info_p(probe, "findnext"):
            a = l
        else:
            b = l - 1
    if state.x[a - 1] != 0:
        raise InconsistentCodemaker(f"binary search landed on fixed position {a}")
    return a


def solve_general(codemaker: Codemaker | QueryCounter, params: GameParams) -> tuple[Code, Transcript]:
    if params.k <= params.n:
        raise PreconditionError("solve_general needs k > n")
    state = SolverState(params, as_counter(codemaker, params), spare_color=True)
    state.v = initial_phase_general(state.counter, params)
    excluded: set[tuple[int, int]] = set()
    seen = 0

    while True:
        j = _active(state.v)
        m = find_next_general(state, j)
        seen = _add_exclusions(state.transcript, seen, excluded)
        color = state.shift(j)[m - 1]
        if (m, color) in excluded:
            raise InconsistentCodemaker(f"color {color} at position {m} was ruled out earlier")
        state.fix(m, color)
        if not state.open_positions():
            break
        state.refresh(j)

    return tuple(state.x), state.transcript


def _add_exclusions(transcript: Transcript, start: int, out: set[tuple[int, int]]) -> int:
    """Record (position, color) pairs ruled out by raw no-answers; a cross-check only."""
    for rec in transcript.records[start:]:
        if not rec.answer:
            out.update(enumerate(rec.code, start=1))
    return len(transcript)
