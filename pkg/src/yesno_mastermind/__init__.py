"""Yes-No AB-Mastermind: codebreakers, a cheating codemaker, and reference oracles."""

from .core import (Code, GameParams, HonestCodemaker, QueryCounter, Transcript, accounting_bound,
                   format_code, info, lower_bound, parse_code, shift_query, upper_bound,
                   validate_code)
from .infop import cyclic_derangement, info_p
from .solver_general import solve_general
from .solver_perm import solve

__version__ = "0.1.0"


def break_code(codemaker, params: GameParams):
    """Pick the right strategy for the board and run it."""
    if params.k > params.n:
        return solve_general(codemaker, params)
    return solve(codemaker, params)


__all__ = [
    "Code", "GameParams", "HonestCodemaker", "QueryCounter", "Transcript", "accounting_bound",
    "break_code", "cyclic_derangement", "format_code", "info", "info_p", "lower_bound",
    "parse_code", "shift_query", "solve", "solve_general", "upper_bound", "validate_code",
]
