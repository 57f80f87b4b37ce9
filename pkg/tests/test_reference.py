import random

import pytest

from oracles import all_codes, any_match, consistent
from yesno_mastermind import break_code
from yesno_mastermind.core import GameParams, HonestCodemaker, TooLarge
from yesno_mastermind.reference import (InconsistentPartial, _search_consistent,
                                        greedy_small_solve, open_match_truth, replay_consistent)


def test_open_match_truth_examples():
    y = (9, 10, 6, 8, 4, 2, 7, 5, 1, 3)
    x = (0, 0, 6, 8, 0, 2, 0, 0, 1, 3)
    assert open_match_truth((7, 8, 9, 10, 1, 2, 3, 4, 5, 6), x, y) is False
    assert open_match_truth((8, 9, 10, 1, 2, 3, 4, 5, 6, 7), x, y) is True
    with pytest.raises(InconsistentPartial):
        open_match_truth(y, (1,) + (0,) * 9, y)


def test_replay_basics():
    p = GameParams(3, 3)
    assert replay_consistent([], p) == set(all_codes(3, 3))
    assert replay_consistent([((1, 2, 3), True), ((1, 2, 3), False)], p) == set()


@pytest.mark.parametrize("n, k", [(3, 3), (4, 4), (3, 5), (4, 6), (5, 5)])
def test_brute_force_and_search_agree(n, k):
    rng = random.Random(n * 31 + k)
    p = GameParams(n, k)
    codes = all_codes(n, k)
    for _ in range(40):
        y = rng.choice(codes)
        pairs = [(q, any_match(q, y)) for q in rng.sample(codes, rng.randint(0, 2 * n))]
        expect = consistent(pairs, n, k)
        assert replay_consistent(pairs, p) == expect
        assert _search_consistent(pairs, p, None) == expect


def test_search_handles_unsatisfiable():
    p = GameParams(4, 4)
    pairs = [((1, 2, 3, 4), False), ((2, 1, 4, 3), False), ((3, 4, 1, 2), False),
             ((4, 3, 2, 1), False)]
    assert _search_consistent(pairs, p, None) == set()


def test_search_limit():
    with pytest.raises(TooLarge):
        replay_consistent([], GameParams(12, 12), limit=10)


@pytest.mark.parametrize("n, k", [(5, 5), (4, 6), (10, 10), (40, 40), (16, 24), (128, 128)])
def test_replay_of_solver_run_is_singleton(n, k):
    rng = random.Random(n + k)
    p = GameParams(n, k)
    for _ in range(5):
        y = tuple(rng.sample(range(1, k + 1), n))
        out, transcript = break_code(HonestCodemaker(y), p)
        assert replay_consistent(transcript, p) == {out} == {y}


def test_greedy_small():
    for n, cap in [(1, 0), (2, 1), (3, 3)]:
        p = GameParams(n, n)
        for y in all_codes(n, n):
            out, transcript = greedy_small_solve(HonestCodemaker(y), p)
            assert out == y and len(transcript) <= cap


def test_greedy_with_spare_colors():
    p = GameParams(2, 4)
    for y in all_codes(2, 4):
        assert greedy_small_solve(HonestCodemaker(y), p)[0] == y
