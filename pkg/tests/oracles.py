"""Brute-force reference computations for the tests.

Deliberately naive and independent of the package: shifts by repeated
rotation, matches by direct comparison, candidate sets by enumeration.
"""

import itertools
import math


def rotated_prefix(j, n, k):
    seq = list(range(1, k + 1))
    for _ in range(j - 1):
        seq = [seq[-1]] + seq[:-1]
    return tuple(seq[:n])


def matches(query, secret):
    return [i + 1 for i, (q, s) in enumerate(zip(query, secret)) if q == s]


def any_match(query, secret):
    return bool(matches(query, secret))


def open_matches(query, partial, secret):
    return [i for i in matches(query, secret) if partial[i - 1] == 0]


def all_codes(n, k):
    return list(itertools.permutations(range(1, k + 1), n))


def consistent(pairs, n, k):
    return {c for c in all_codes(n, k) if all(any_match(q, c) == a for q, a in pairs)}


def log2_space(n, k):
    return math.log2(math.factorial(k) // math.factorial(k - n))


def subsets_of_positions(secret):
    n = len(secret)
    for mask in range(1 << n):
        yield tuple(secret[i] if mask >> i & 1 else 0 for i in range(n))
