import math
from fractions import Fraction

import pytest

from obldel import analysis, inner_hash
from obldel.adversarial import VTCode
from obldel.analysis import (ChannelModel, GridSpec, bad_string_census, close_patterns_count, exact_failure,
                             gap_witness, lower_bound_value, monotonicity_report, oblivious_to_average,
                             redundancy_table, rep_block_check, representative_patterns, two_path_agreement,
                             worst_case_report)
from obldel.bitseq import BitString, BudgetExceeded, CodeParams, DeletionPattern, apply_pattern, iter_patterns
from obldel.oblivious import ExplicitCode, SystematicCode, explicit_build, randomized_build

from conftest import greedy


@pytest.fixture(scope="module")
def loose():
    # identity inner hash with a tiny modulus so failures are nonzero
    params = CodeParams(10, 1, Fraction(1, 2))
    return ExplicitCode(params, inner_hash.identity_spec(10, 1), 128, 0.0)


def test_two_paths_agree_with_nonzero_failures(loose):
    grid = GridSpec(messages=tuple(BitString.from_int(v, 10) for v in range(0, 1024, 17)))
    assert two_path_agreement(loose, grid) == []
    rep = worst_case_report(loose, ChannelModel("oblivious-exhaustive"), grid)
    assert rep.worst > 0


def test_literal_decode_matches_batched(loose):
    m = BitString("1101001011")
    for tau in list(iter_patterns(10, 1)):
        a = analysis.decode_outcomes(loose, m, tau, literal=True)
        b = analysis.decode_outcomes(loose, m, tau)
        assert a == b


def test_reduced_grid_covers_full_grid(loose):
    grid = GridSpec(messages=(BitString("0011101000"), BitString("1111100000")))
    full = GridSpec(messages=grid.messages, reduced=False)
    a = worst_case_report(loose, ChannelModel("oblivious-exhaustive"), grid)
    b = worst_case_report(loose, ChannelModel("oblivious-exhaustive"), full)
    assert a.worst == b.worst
    assert len(b.points) == 2 * 10
    for m in grid.messages:
        reps = representative_patterns(loose, m)
        assert len({apply_pattern(m, tau) for tau in reps}) == len(reps)


def test_vt_is_exact_zero():
    rep = worst_case_report(VTCode(8), ChannelModel("oblivious-exhaustive"), GridSpec(reduced=False))
    assert rep.ok and rep.worst == 0 and len(rep.points) == 256 * 8


def test_channel_models(loose):
    grid = GridSpec(messages=(BitString("0110100111"),))
    obl = worst_case_report(loose, ChannelModel("oblivious-exhaustive"), GridSpec(grid.messages, reduced=False))
    adv = worst_case_report(loose, ChannelModel("adversarial-worst-case"), grid)
    uni = worst_case_report(loose, ChannelModel("uniform-random-t"), grid)
    assert adv.worst >= obl.worst
    assert uni.worst == obl.mean
    iid0 = worst_case_report(loose, ChannelModel("iid-deletion", Fraction(0)), grid)
    assert iid0.worst == exact_failure(loose, grid.messages[0], DeletionPattern(10, tuple(range(1, 10))), "count") \
        or iid0.worst == 0
    iid = worst_case_report(loose, ChannelModel("iid-deletion", Fraction(1, 20)), grid)
    assert 0 < iid.worst < 1
    with pytest.raises(ValueError):
        ChannelModel("bogus")


def test_empty_grid_and_budget(loose):
    rep = worst_case_report(loose, ChannelModel("oblivious-exhaustive"), GridSpec(messages=()))
    assert rep.points == [] and rep.ok
    assert rep.to_csv() == ",".join(analysis.CSV_COLUMNS) + "\n"
    with pytest.raises(BudgetExceeded):
        worst_case_report(loose, ChannelModel("oblivious-exhaustive"), GridSpec(), budget=100)


def test_csv_is_deterministic():
    code = explicit_build(CodeParams(8, 1, Fraction(1, 2)), greedy(8, 1))
    grid = GridSpec(messages=tuple(BitString.from_int(v, 8) for v in range(0, 256, 31)))
    a = worst_case_report(code, ChannelModel("oblivious-exhaustive"), grid).to_csv()
    b = worst_case_report(code, ChannelModel("oblivious-exhaustive"), grid).to_csv()
    assert a == b and a.splitlines()[0] == ",".join(analysis.CSV_COLUMNS)


def test_rep_block_check():
    assert rep_block_check("1011", 3) == []
    assert rep_block_check("", 2) == []


def test_close_patterns_example():
    c = close_patterns_count(DeletionPattern(3, (1, 2)), 1)
    assert c.count == 2 and c.bound == 16 and c.holds


def test_close_patterns_small_grid():
    for n in range(2, 8):
        for t in range(1, min(3, n)):
            for tau in iter_patterns(n, t):
                for ell in range(0, 3):
                    assert close_patterns_count(tau, ell).holds


def test_bad_string_census_examples():
    assert bad_string_census(4, 1, 1).count == 14
    assert bad_string_census(10, 3, 1).count == 476
    assert bad_string_census(10, 3, 1).holds


def test_lower_bound_value():
    v = lower_bound_value(16, 2, Fraction(1, 2))
    assert v == pytest.approx(math.log2(120) + 2 - math.log2(6) - 2)
    with pytest.raises(ValueError):
        lower_bound_value(16, 0, Fraction(1, 2))


def test_redundancy_table_shape():
    text = redundancy_table(["vt", "explicit", "randomized"], [(8, 1, Fraction(1, 2))])
    lines = text.splitlines()
    assert lines[0] == ",".join(analysis.REDUNDANCY_COLUMNS)
    assert len(lines) == 4
    assert lines[1].startswith("vt,8,1,1/2,4,")


def test_monotonicity_report_runs():
    params = CodeParams(8, 1, Fraction(1, 2))
    checked, bad = monotonicity_report(params, inner_hash.identity_spec(8, 1), [64, 128, 256], range(0, 256, 5))
    assert checked > 0
    for case in bad:
        assert case.fail_large > case.fail_small


def test_gap_witness():
    g = gap_witness()
    assert g.explicit_worst == Fraction(1, 137)
    assert g.adversarial_worst == 0


def test_average_case_shortcut_matches_literal():
    de = explicit_build(CodeParams(6, 1, Fraction(1, 2)), greedy(6, 1))
    code = SystematicCode(de)
    for seed in range(3):
        a = oblivious_to_average(code, seed)
        b = oblivious_to_average(code, seed, literal=True)
        assert a.error == b.error and a.codewords_only and b.codewords_only


def test_close_patterns_all_when_ell_large():
    tau = DeletionPattern(5, (2, 4, 5))
    assert close_patterns_count(tau, 3).count == math.comb(5, 2)
