import itertools
from fractions import Fraction

import pytest

from obldel import inner_hash, kernels
from obldel.adversarial import (AdversarialCode, VTCode, adversarial_build, adversarial_decode,
                                adversarial_encode_hash, rep_decode, rep_encode, vt_decode)
from obldel.bitseq import BitString, CodeParams, all_words, apply_pattern, confusable_set, iter_patterns
from obldel.hashtag import HashTag
from obldel.inner_hash import DecodeError
from obldel.primes import PrimeRange, bits_for, primes_in_range

from conftest import greedy
from oracles import subseqs, supersequences, vt, words


def test_rep_examples():
    assert rep_encode("01", 3).bits == "000111"
    assert rep_decode("00111", 3).bits == "01"
    with pytest.raises(DecodeError):
        rep_decode("000", 3, length=2)


def test_rep_round_trip_exhaustive():
    for k in range(1, 5):
        for n in range(0, 7):
            for x in words(n):
                c = rep_encode(x, k).bits
                for j in range(k):
                    for gone in itertools.combinations(range(len(c)), j):
                        z = "".join(ch for i, ch in enumerate(c) if i not in gone)
                        assert rep_decode(z, k, n).bits == x


def test_vt_decode_examples():
    assert vt_decode("11", 3, 3) == BitString("110")
    assert vt_decode("0000", 0, 5) == BitString("00000")
    with pytest.raises(ValueError):
        vt_decode("11", 3, 4)


def test_vt_decode_matches_enumeration():
    for n in range(1, 10):
        for x in words(n):
            s = vt(x)
            for z in subseqs(x, n - 1):
                want = [w for w in sorted(supersequences(z, n)) if vt(w) == s]
                assert want == [x]
                assert vt_decode(z, s, n).bits == x


def test_vt_decode_rejects_inconsistent():
    with pytest.raises(DecodeError):
        vt_decode("11", 9, 3)


def test_vt_code_as_document_exchange():
    code = VTCode(10)
    assert code.redundancy == 4
    m = BitString("1100101110")
    tag = code.encode_hash(m)
    for tau in iter_patterns(10, 1):
        assert code.decode(apply_pattern(m, tau), tag) == m


@pytest.fixture(scope="module")
def adv82():
    return adversarial_build(CodeParams(8, 2, Fraction(1, 4)), greedy(8, 2), seed=0)


def test_adversarial_build_contract(adv82):
    assert len(adv82.primes) == 80
    assert adv82.tag_width == bits_for(adv82.M) + bits_for(80)
    assert all(i >= 0 for i in adv82.good_cache)
    assert adv82.scheme == "randomized-adversarial"


def test_good_prime_is_good_by_recomputation(adv82):
    spec = adv82.inner
    for x in list(all_words(8))[::7]:
        tag = adversarial_encode_hash(adv82, x)
        p = adv82.primes.primes[tag.prime_field]
        hx = inner_hash.hash(spec, x)
        assert tag.residue == hx % p
        assert all(inner_hash.hash(spec, y) % p != tag.residue for y in confusable_set(x, 2) if y != x)
        # it is the first good prime in stored order
        for q in adv82.primes.primes[: tag.prime_field]:
            assert any(inner_hash.hash(spec, y) % q == hx % q for y in confusable_set(x, 2) if y != x)


def test_adversarial_deterministic_and_correct(adv82):
    for x in all_words(8):
        tag = adversarial_encode_hash(adv82, x)
        assert adversarial_encode_hash(adv82, x) == tag
        for tau in iter_patterns(8, 2):
            assert adversarial_decode(adv82, apply_pattern(x, tau), tag) == x


def test_good_prime_density_in_full_range():
    # with the identity hash, a good prime must avoid every confusable difference
    params = CodeParams(10, 1, Fraction(1, 2))
    spec = inner_hash.identity_spec(10, 1)
    code = adversarial_build(params, spec, seed=0, verify=False)
    allp = primes_in_range(PrimeRange.half(code.M))
    for v in range(0, 1 << 10, 37):
        others = [y for y in kernels.confusable(v, 10, 1) if y != v]
        good = sum(1 for p in allp if all((y - v) % p for y in others))
        assert good * 2 >= len(allp)


def test_tampered_tag_is_an_error(adv82):
    x = BitString("10110011")
    tag = adversarial_encode_hash(adv82, x)
    with pytest.raises(IndexError):
        adversarial_decode(adv82, x[:6], HashTag(tag.residue, 10 ** 6, indexed=True))
    z = x[:6]
    wrong = [r for r in range(adv82.M) if r != tag.residue]
    errors = 0
    for r in wrong[:200]:
        try:
            out = adversarial_decode(adv82, z, HashTag(r, tag.prime_field, indexed=True))
            assert out != x
        except DecodeError:
            errors += 1
    assert errors > 0


def test_t0_identity():
    params = CodeParams(6, 0)
    code = adversarial_build(params, inner_hash.build_greedy_coloring(6, 0), seed=1)
    m = BitString("011010")
    assert code.decode(m, code.encode_hash(m)) == m
