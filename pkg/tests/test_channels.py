import math
from fractions import Fraction

import pytest

from obldel.bitseq import BitString, BudgetExceeded, DeletionPattern
from obldel.channels import ChannelInstance, all_patterns, corrupt, draw_pattern


def test_parse_round_trip():
    for text in ("oblivious:6:1,3,4,6:0", "uniform:10,2:7", "iid:12,1/8:3"):
        ch = ChannelInstance.parse(text)
        assert str(ch) == text
        assert ChannelInstance.parse(str(ch)) == ch
    for bad in ("uniform:10,2", "foo:1,1:0", "uniform:3,5:0"):
        with pytest.raises(ValueError):
            ChannelInstance.parse(bad)


def test_oblivious_ignores_trial():
    ch = ChannelInstance.oblivious(DeletionPattern.from_deleted(6, [2, 5]))
    c = BitString("101100")
    assert corrupt(ch, c, 0) == corrupt(ch, c, 99) == BitString("1110")


def test_committed_pattern_is_coin_independent():
    a = ChannelInstance.committed(10, 2, "1100110011", seed=4)
    b = ChannelInstance.committed(10, 2, "1100110011", seed=4)
    assert a == b and a.t == 2


def test_uniform_length_and_determinism():
    ch = ChannelInstance("uniform", 12, seed=5, t=3)
    for trial in range(50):
        tau = draw_pattern(ch, trial)
        assert tau.t == 3 and tau == draw_pattern(ch, trial)
    with pytest.raises(ValueError):
        corrupt(ch, "101")


def test_iid_deletion_count_within_three_sigma():
    n, p, trials = 20, Fraction(1, 5), 100_000
    ch = ChannelInstance("iid", n, seed=11, p=p)
    total = sum(draw_pattern(ch, k).t for k in range(trials))
    mean, sd = n * float(p), math.sqrt(n * float(p) * (1 - float(p)) / trials)
    assert abs(total / trials - mean) <= 3 * sd


def test_all_patterns_budget():
    assert len(list(all_patterns(6, 2))) == 15
    with pytest.raises(BudgetExceeded):
        all_patterns(40, 10, budget=1000)
