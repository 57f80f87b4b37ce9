"""Game parameters, codes, the yes/no oracle and query accounting."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Protocol, Sequence

Code = tuple[int, ...]

PURPOSES = ("initial", "first-fix", "findnext", "infop-aux", "final")


class MastermindError(Exception):
    pass


class InvalidCode(MastermindError, ValueError):
    pass


class WrongLength(InvalidCode):
    pass


class ColorOutOfRange(InvalidCode):
    pass


class RepeatedColor(InvalidCode):
    pass


class IndexOutOfRange(MastermindError, ValueError):
    pass


class TooSmall(MastermindError, ValueError):
    pass


class PreconditionError(MastermindError):
    pass


class InconsistentCodemaker(MastermindError):
    """Answers so far admit no repetition-free secret, or contradict a counting guarantee."""


class TooLarge(MastermindError):
    def __init__(self, size: int, budget: int):
        super().__init__(f"candidate space of {size} codes exceeds budget {budget}")
        self.size = size
        self.budget = budget


@dataclass(frozen=True)
class GameParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.k < self.n:
            raise ValueError(f"k must be >= n, got n={self.n}, k={self.k}")

    @property
    def ell(self) -> int:
        return self.k + 1 - self.n

    @property
    def is_permutation(self) -> bool:
        return self.k == self.n

    def space_size(self) -> int:
        """Number of repetition-free codes, k!/(k-n)!."""
        return math.perm(self.k, self.n)


def validate_code(entries: Iterable[int], params: GameParams) -> Code:
    code = tuple(int(c) for c in entries)
    if len(code) != params.n:
        raise WrongLength(f"expected {params.n} colors, got {len(code)}")
    for c in code:
        if not 1 <= c <= params.k:
            raise ColorOutOfRange(f"color {c} outside [1, {params.k}]")
    if len(set(code)) != len(code):
        raise RepeatedColor(f"code {format_code(code)} repeats a color")
    return code


def parse_code(text: str, params: GameParams) -> Code:
    """Parse the comma-separated wire form, e.g. ``"9,10,6,8"``."""
    try:
        entries = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InvalidCode(f"cannot parse code {text!r}") from exc
    return validate_code(entries, params)


def format_code(code: Sequence[int]) -> str:
    return ",".join(str(c) for c in code)


def shift_query(j: int, params: GameParams) -> Code:
    """The j-th initial query: first n entries of the (j-1)-fold right rotation of 1..k."""
    if not 1 <= j <= params.k:
        raise IndexOutOfRange(f"shift index {j} outside [1, {params.k}]")
    k = params.k
    return tuple((i - j) % k + 1 for i in range(1, params.n + 1))


def info(query: Sequence[int], secret: Sequence[int]) -> bool:
    """True iff the query agrees with the secret in at least one position."""
    return any(q == s for q, s in zip(query, secret))


def lower_bound(params: GameParams) -> float:
    return sum(math.log2(j) for j in range(params.ell, params.k + 1))


def upper_bound(params: GameParams) -> float:
    n, k = params.n, params.k
    if n < 4:
        raise TooSmall(f"upper bound formula needs n >= 4, got n={n}")
    if k == n:
        return (n - 3) * math.log2(n) + 5 * n / 2 - 1
    return (n - 2) * math.log2(n) + k + 1


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def accounting_bound(params: GameParams) -> int:
    """Query budget derived by charging every step of the strategy, ceilings included."""
    n, k = params.n, params.k
    lg = ceil_log2(n)
    if k == n:
        return (n - 2) * lg + math.ceil(5 * n / 2) + n
    return n * lg + n + k + 2


# -- codemakers ---------------------------------------------------------------


class Codemaker(Protocol):
    def answer(self, query: Code) -> bool: ...


class HonestCodemaker:
    def __init__(self, secret: Sequence[int]):
        self.secret = tuple(secret)

    def answer(self, query: Code) -> bool:
        return info(query, self.secret)


@dataclass(frozen=True)
class QueryRecord:
    seq: int
    code: Code
    answer: bool
    purpose: str


@dataclass
class Transcript:
    records: list[QueryRecord] = field(default_factory=list)

    def append(self, code: Code, answer: bool, purpose: str) -> QueryRecord:
        if purpose not in PURPOSES:
            raise ValueError(f"unknown purpose tag {purpose!r}")
        rec = QueryRecord(len(self.records) + 1, tuple(code), bool(answer), purpose)
        self.records.append(rec)
        return rec

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def count(self, purpose: str | None = None) -> int:
        if purpose is None:
            return len(self.records)
        return sum(1 for r in self.records if r.purpose == purpose)


class QueryCounter:
    """Wraps a codemaker; every query goes through here and lands in the transcript.

    Queries are validated before they reach the wrapped codemaker, so a solver
    cannot issue a code that breaks the repetition-free rule without raising.
    """

    def __init__(self, codemaker: Codemaker, params: GameParams,
                 transcript: Transcript | None = None):
        self.codemaker = codemaker
        self.params = params
        self.transcript = transcript if transcript is not None else Transcript()

    def ask(self, query: Sequence[int], purpose: str) -> bool:
        code = validate_code(query, self.params)
        ans = bool(self.codemaker.answer(code))
        self.transcript.append(code, ans, purpose)
        return ans

    @property
    def queries(self) -> int:
        return len(self.transcript)


def as_counter(codemaker: Codemaker | QueryCounter, params: GameParams) -> QueryCounter:
    if isinstance(codemaker, QueryCounter):
        return codemaker
    return QueryCounter(codemaker, params)
