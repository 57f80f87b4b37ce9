"""Whether a query hits the secret at an *open* position, from one or two real queries.

A partial solution ``x`` is a length-n tuple where 0 marks an open position and
a nonzero entry is a color already identified at that position. The plain
oracle cannot tell a match at an identified position from a match at an open
one, so every position where the query agrees with ``x`` is rearranged to carry
a known-wrong color before asking.
"""

from __future__ import annotations

from typing import Sequence

from .core import Code, MastermindError, QueryCounter

PartialSolution = tuple[int, ...]


class TooFewIndices(MastermindError, ValueError):
    pass


class DegenerateBoard(MastermindError):
    pass


def validate_partial(partial: Sequence[int], n: int, k: int) -> PartialSolution:
    x = tuple(int(c) for c in partial)
    if len(x) != n:
        raise ValueError(f"partial solution has length {len(x)}, expected {n}")
    fixed = [c for c in x if c]
    if any(not 1 <= c <= k for c in fixed):
        raise ValueError(f"partial solution {x} has a color outside [1, {k}]")
    if len(set(fixed)) != len(fixed):
        raise ValueError(f"partial solution {x} repeats a fixed color")
    return x


def cyclic_derangement(indices: Sequence[int]) -> dict[int, int]:
    """Map each index to its predecessor in ascending order; the smallest maps to the largest."""
    idx = sorted(indices)
    if len(idx) < 2:
        raise TooFewIndices(f"a derangement needs at least two indices, got {idx}")
    return {i: idx[t - 1] for t, i in enumerate(idx)}


def plan_info_p(query: Sequence[int], partial: Sequence[int],
                k: int | None = None) -> tuple[str, list[Code]]:
    """Return the case letter and the real queries infoP would issue.

    Positions are 1-based in the mapping helpers but the returned codes are
    plain tuples. Case ``"d"`` returns two queries; the others return one.
    Passing ``k > n`` enables case ``"d1"``: the lone coinciding position is
    recolored with a color the query does not use, costing one query.
    """
    sigma = tuple(query)
    n = len(sigma)
    coincide = [i for i in range(1, n + 1) if partial[i - 1] and sigma[i - 1] == partial[i - 1]]

    if not coincide:
        return "a", [sigma]

    if len(coincide) > 1:
        pi = cyclic_derangement(coincide)
        rho = list(sigma)
        for i, src in pi.items():
            rho[i - 1] = sigma[src - 1]
        return "b", [tuple(rho)]

    i = coincide[0]
    others_fixed = [j for j in range(1, n + 1) if j != i and partial[j - 1]]
    if others_fixed:
        return "c", [_swap(sigma, i, others_fixed[0])]

    if k is not None and k > n:
        spare = min(set(range(1, k + 1)) - set(sigma))
        rho = list(sigma)
        rho[i - 1] = spare
        return "d1", [tuple(rho)]
    if n < 3:
        raise DegenerateBoard(f"infoP needs two free partners for position {i}, but n={n}")
    j1, j2 = [j for j in range(1, n + 1) if j != i][:2]
    return "d", [_swap(sigma, i, j1), _swap(sigma, i, j2)]


def info_p(query: Sequence[int], partial: Sequence[int], counter: QueryCounter,
           purpose: str = "infop-aux", spare_color: bool = False) -> bool:
    k = counter.params.k if spare_color else None
    case, queries = plan_info_p(query, partial, k)
    if case == "d":
        # both modified queries are always asked, as in the original accounting
        first = counter.ask(queries[0], purpose)
        second = counter.ask(queries[1], purpose)
        return first or second
    return counter.ask(queries[0], purpose)


def _swap(code: Code, i: int, j: int) -> Code:
    out = list(code)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)
