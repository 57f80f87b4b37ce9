"""Codebreaker for k = n: shift queries, then one binary search per position.

Positions and shift indices are 1-based throughout, matching the way codes
are written down; Python indexing is confined to the probe builders.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (Code, Codemaker, GameParams, InconsistentCodemaker, MastermindError,
                   PreconditionError, QueryCounter, Transcript, as_counter, shift_query)
from .infop import info_p


class NoActiveIndex(MastermindError):
    pass


@dataclass
class SolverState:
    params: GameParams
    counter: QueryCounter
    x: list[int] = field(default_factory=list)
    v: list[bool] = field(default_factory=list)  # v[j-1] answers "σ^j has a correct open position"
    spare_color: bool = False

    def __post_init__(self):
        if not self.x:
            self.x = [0] * self.params.n

    @property
    def transcript(self) -> Transcript:
        return self.counter.transcript

    def open_positions(self) -> list[int]:
        return [i for i in range(1, self.params.n + 1) if self.x[i - 1] == 0]

    def shift(self, j: int) -> Code:
        return shift_query(j, self.params)

    def shift_containing(self, position: int, color: int) -> int:
        """Index s of the unique initial query with color at position."""
        return (position - color) % self.params.k + 1

    def fix(self, position: int, color: int) -> None:
        if self.x[position - 1] != 0:
            raise InconsistentCodemaker(f"position {position} is already fixed")
        if color in self.x:
            raise InconsistentCodemaker(f"color {color} is already fixed elsewhere")
        self.x[position - 1] = color

    def refresh(self, j: int) -> None:
        self.v[j - 1] = self.info_p(self.shift(j), "infop-aux")

    def info_p(self, query, purpose: str) -> bool:
        return info_p(query, self.x, self.counter, purpose, self.spare_color)


def initial_phase(codemaker: Codemaker | QueryCounter, params: GameParams) -> list[bool]:
    counter = as_counter(codemaker, params)
    return [counter.ask(shift_query(j, params), "initial") for j in range(1, params.k + 1)]


def choose_active_index(v: list[bool]) -> int:
    """Smallest j with v_j = yes and v at the cyclic successor = no."""
    size = len(v)
    for j in range(1, size + 1):
        if v[j - 1] and not v[j % size]:
            return j
    raise NoActiveIndex(f"no yes→no transition in {['yes' if a else 'no' for a in v]}")


def find_first_all_yes(codemaker: Codemaker | QueryCounter, params: GameParams) -> tuple[int, int]:
    """Locate the single match of the identity query when every shift answered yes.

    Swapping a pair of neighbours in the identity kills the match iff the
    pair contains it; no swap can create a match because the secret is a
    permutation with exactly one fixed point.
    """
    counter = as_counter(codemaker, params)
    n = params.n
    if n < 3:
        raise PreconditionError("pair-swap search needs n >= 3")
    ident = shift_query(1, params)
    for t in range(1, n // 2 + 1):
        p, q = 2 * t - 1, 2 * t
        if not counter.ask(_swapped(ident, p, q), "first-fix"):
            partner = n if n not in (p, q) else 1
            if counter.ask(_swapped(ident, q, partner), "first-fix"):
                return p, p
            return q, q
    if n % 2 == 0:
        raise InconsistentCodemaker("every pair swap kept a match, impossible for even n")
    return n, n


def find_first_no_pivot(state: SolverState, j: int) -> tuple[int, int]:
    """First fix when x = 0 and shift j answers yes while its successor answers no.

    Probe for threshold l keeps σ^j on positions l..n and puts σ^r (all wrong)
    on 2..l-1. Position 1 must take the leftover color σ^j_{l-1}, which may be
    right there; that can fake a single "yes", and only at the l where the
    search ends. One extra query then decides which of the two readings holds.
    Returns (position, color) of a correct entry.
    """
    n = state.params.n
    if any(state.x):
        raise PreconditionError("find_first_no_pivot requires an empty partial solution")
    if n < 3:
        raise PreconditionError("find_first_no_pivot needs n >= 3")
    r = j % n + 1
    sj, sr = state.shift(j), state.shift(r)

    a, b = 1, n
    while b > a:
        l = (a + b + 1) // 2
        if l == 2:
            hit = True  # the probe is σ^j itself
        else:
            probe = (sj[l - 2],) + sj[:l - 2] + sj[l - 1:]
            hit = state.info_p(probe, "first-fix")
        if hit:
            a = l
        else:
            b = l - 1
    m = a
    if m == 1:
        return 1, sj[0]
    if m < n:
        # σ^r with m and m+1 swapped: tests σ^j_m at m, everything else known wrong
        probe = list(sr)
        probe[m - 1], probe[m] = probe[m], probe[m - 1]
        if state.counter.ask(probe, "first-fix"):
            return m, sj[m - 1]
        return 1, sj[m - 2]
    # m = n: test σ^j_{n-1} at position 1 with every other placement wrong if σ^j_n is right
    probe = (sj[n - 2], sj[n - 1]) + sj[1:n - 2] + (sj[0],)
    if state.counter.ask(probe, "first-fix"):
        return 1, sj[n - 2]
    return n, sj[n - 1]


def find_next(state: SolverState, j: int, pivot: int | None = None) -> int:
    """Binary search with a pivot color for an open position where σ^j is correct.

    The pivot defaults to the color at the lowest fixed position; any fixed
    color works.
    """
    n = state.params.n
    x = state.x
    if not any(x):
        raise PreconditionError("find_next requires at least one fixed position")
    if not state.v[j - 1] or state.v[j % n]:
        raise PreconditionError(f"index {j} is not active")
    r = j % n + 1
    sj, sr = state.shift(j), state.shift(r)
    c = pivot if pivot is not None else next(col for col in x if col)
    if c not in x:
        raise PreconditionError(f"pivot color {c} is not fixed in the partial solution")
    lj = sj.index(c) + 1
    lr = sr.index(c) + 1

    if lj == n:
        left = True
    else:
        left = not state.info_p(mode_probe(sj, c), "findnext")

    a, b = (1, lj) if left else (lr, n)
    while b > a:
        l = (a + b + 1) // 2
        probe = left_probe(sj, sr, c, l) if left else right_probe(sj, sr, c, l)
        if probe == sj:
            hit = True  # v_j already says yes
        else:
            hit = state.info_p(probe, "findnext")
        if hit:
            b = l - 1
        else:
            a = l
    if x[b - 1] != 0:
        raise InconsistentCodemaker(f"binary search landed on fixed position {b}")
    return b


def mode_probe(sj: Code, c: int) -> Code:
    """Pivot first, then σ^j with the pivot removed."""
    lj = sj.index(c) + 1
    return (c,) + sj[:lj - 1] + sj[lj:]


def left_probe(sj: Code, sr: Code, c: int, l: int) -> Code:
    """σ^j on 1..l-1, pivot at l, σ^r up to the pivot's place in σ^j, σ^j after it."""
    lj = sj.index(c) + 1
    return sj[:l - 1] + (c,) + sr[l:lj] + sj[lj:]


def right_probe(sj: Code, sr: Code, c: int, l: int) -> Code:
    """σ^r before the pivot's place in σ^r, σ^j up to l-1, pivot at l, σ^r after."""
    lr = sr.index(c) + 1
    return sr[:lr - 1] + sj[lr - 1:l - 1] + (c,) + sr[l:]


def resolve_final_pair(state: SolverState) -> Code:
    opens = state.open_positions()
    unused = sorted(set(range(1, state.params.k + 1)) - set(state.x))
    if len(opens) != 2 or len(unused) != 2:
        raise PreconditionError("resolve_final_pair needs exactly two open positions")
    (p, q), (c1, c2) = opens, unused
    cand = list(state.x)
    cand[p - 1], cand[q - 1] = c1, c2
    if state.info_p(cand, "final"):
        return tuple(cand)
    cand[p - 1], cand[q - 1] = c2, c1
    return tuple(cand)


def solve(codemaker: Codemaker | QueryCounter, params: GameParams) -> tuple[Code, Transcript]:
    if params.k != params.n:
        raise PreconditionError("the permutation solver needs k = n")
    if params.n <= 3:
        from .reference import greedy_small_solve
        return greedy_small_solve(codemaker, params)

    state = SolverState(params, as_counter(codemaker, params))
    state.v = initial_phase(state.counter, params)

    if all(state.v):
        m, col = find_first_all_yes(state.counter, params)
        state.fix(m, col)
        state.v[0] = False
    elif any(state.v):
        j = _active(state.v)
        p, col = find_first_no_pivot(state, j)
        state.fix(p, col)
        state.refresh(state.shift_containing(p, col))
    else:
        raise InconsistentCodemaker("no initial query matched; a permutation must match one")

    while len(state.open_positions()) > 2:
        j = _active(state.v)
        m = find_next(state, j)
        state.fix(m, state.shift(j)[m - 1])
        state.refresh(j)

    return resolve_final_pair(state), state.transcript


def _active(v: list[bool]) -> int:
    try:
        return choose_active_index(v)
    except NoActiveIndex as exc:
        raise InconsistentCodemaker(str(exc)) from exc


def _swapped(code: Code, p: int, q: int) -> Code:
    out = list(code)
    out[p - 1], out[q - 1] = out[q - 1], out[p - 1]
    return tuple(out)
