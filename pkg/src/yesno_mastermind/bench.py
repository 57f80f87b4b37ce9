"""Benchmark sweeps and the flat file formats (transcripts, CSV / JSON lines)."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import re
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from . import break_code
from .core import (Code, GameParams, HonestCodemaker, TooLarge, Transcript, accounting_bound,
                   format_code, lower_bound, upper_bound)
from .rng import secret_for_seed

CSV_FIELDS = ["n", "k", "trials", "min_q", "mean_q", "max_q",
              "bound_theorem", "bound_accounting", "lower_bound"]
EXHAUSTIVE_MAX_N = 7
EXHAUSTIVE_BUDGET = 200_000


@dataclass(frozen=True)
class BenchRow:
    n: int
    k: int
    trials: int
    min_q: int
    mean_q: float
    max_q: int
    bound_theorem: float | None
    bound_accounting: float
    lower_bound: float

    def csv_values(self) -> list[str]:
        theorem = "" if self.bound_theorem is None else f"{self.bound_theorem:.4f}"
        return [str(self.n), str(self.k), str(self.trials), str(self.min_q), f"{self.mean_q:.4f}",
                str(self.max_q), theorem, str(int(self.bound_accounting)), f"{self.lower_bound:.4f}"]

    def warnings(self) -> list[str]:
        out = []
        if self.bound_theorem is not None and self.max_q > self.bound_theorem:
            out.append(f"n={self.n} k={self.k}: max_q {self.max_q} exceeds theorem value "
                       f"{self.bound_theorem:.4f}")
        if self.k > self.n:
            loose = self.n * math.log2(self.n) + self.k
            if self.max_q > loose:
                out.append(f"n={self.n} k={self.k}: max_q {self.max_q} exceeds n*log2(n)+k = {loose:.4f}")
        if self.max_q > self.bound_accounting:
            out.append(f"n={self.n} k={self.k}: max_q {self.max_q} exceeds accounting bound "
                       f"{int(self.bound_accounting)}")
        return out


def theorem_bound(params: GameParams) -> float | None:
    return upper_bound(params) if params.n >= 4 else None


def secrets_for(params: GameParams, trials: int, seed: int, exhaustive: bool) -> Iterable[Code]:
    if exhaustive:
        size = params.space_size()
        if params.n > EXHAUSTIVE_MAX_N or size > EXHAUSTIVE_BUDGET:
            raise TooLarge(size, EXHAUSTIVE_BUDGET)
        return itertools.permutations(range(1, params.k + 1), params.n)
    return (secret_for_seed(params, seed + t) for t in range(trials))


def bench_row(params: GameParams, trials: int = 100, seed: int = 0, exhaustive: bool = False,
              solver: Callable = break_code) -> BenchRow:
    counts = []
    for secret in secrets_for(params, trials, seed, exhaustive):
        found, transcript = solver(HonestCodemaker(secret), params)
        if found != tuple(secret):
            raise AssertionError(f"solver returned {format_code(found)} for secret {format_code(secret)}")
        counts.append(len(transcript))
    return BenchRow(params.n, params.k, len(counts), min(counts), sum(counts) / len(counts),
                    max(counts), theorem_bound(params), accounting_bound(params),
                    lower_bound(params))


def run_bench(ns: Iterable[int], k_rule: str = "n", trials: int = 100, seed: int = 0,
              exhaustive: bool = False) -> list[BenchRow]:
    return [bench_row(GameParams(n, eval_k_rule(k_rule, n)), trials, seed, exhaustive)
            for n in ns]


_K_RULE = re.compile(r"^\s*(?:(\d+)\s*\*?\s*)?n\s*(?:\+\s*(\d+))?\s*$")


def eval_k_rule(rule: str, n: int) -> int:
    """``"n"``, ``"2n"``, ``"n+8"``, ``"2*n+1"`` or a plain integer."""
    rule = str(rule)
    if rule.strip().isdigit():
        return int(rule)
    m = _K_RULE.match(rule)
    if not m:
        raise ValueError(f"cannot read k rule {rule!r}")
    mult = int(m.group(1) or 1)
    add = int(m.group(2) or 0)
    return mult * n + add


def parse_n_range(text: str) -> list[int]:
    """``"8"``, ``"4-7"``, ``"8,16,32"`` or a mix such as ``"4-6,16"``."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError("empty n range")
    return out


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        writer.writerow(row.csv_values())
    return buf.getvalue()


def rows_to_json_lines(rows: Iterable[BenchRow]) -> str:
    return "".join(json.dumps(asdict(row)) + "\n" for row in rows)


# -- transcripts ---------------------------------------------------------------


def transcript_to_text(transcript: Transcript, params: GameParams, secret: Code | None) -> str:
    """One JSON object, laid out with one query per line so runs diff cleanly."""
    lines = ["{", f'  "params": {json.dumps({"n": params.n, "k": params.k})},', '  "queries": [']
    recs = list(transcript)
    for idx, rec in enumerate(recs):
        item = {"seq": rec.seq, "code": format_code(rec.code),
                "answer": "yes" if rec.answer else "no", "purpose": rec.purpose}
        lines.append("    " + json.dumps(item) + ("," if idx < len(recs) - 1 else ""))
    lines.append("  ],")
    result = {"secret": format_code(secret) if secret is not None else None,
              "total_queries": len(recs)}
    lines.append(f'  "result": {json.dumps(result)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def transcript_from_text(text: str) -> tuple[GameParams, Transcript, Code | None]:
    data = json.loads(text)
    params = GameParams(data["params"]["n"], data["params"]["k"])
    transcript = Transcript()
    for item in data["queries"]:
        code = tuple(int(c) for c in item["code"].split(","))
        transcript.append(code, item["answer"] == "yes", item["purpose"])
    secret = data["result"]["secret"]
    return params, transcript, (tuple(int(c) for c in secret.split(",")) if secret else None)
