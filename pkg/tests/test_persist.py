import json
from fractions import Fraction

import pytest

from obldel import inner_hash, persist
from obldel.adversarial import VTCode, adversarial_build
from obldel.bitseq import BitString, CodeParams
from obldel.oblivious import (SystematicCode, build_list_code, existential_build, explicit_build,
                              list_wrap_build, randomized_build)
from obldel.persist import DescriptorError

from conftest import greedy


def _descs():
    p = CodeParams(8, 1, Fraction(1, 2))
    g = greedy(8, 1)
    lc = build_list_code(6, 1, 2)
    yield VTCode(9)
    yield explicit_build(p, g)
    yield randomized_build(p, g, seed=2, verify=False)
    yield adversarial_build(p, g, seed=2, verify=False)
    yield SystematicCode(explicit_build(p, g))
    yield list_wrap_build(lc, CodeParams(6, 1, Fraction(1, 2)), inner_hash.identity_spec(lc.length, 1))
    yield existential_build(CodeParams(12, 1, Fraction(1, 2)), 16, 4, seed=0)


@pytest.mark.parametrize("desc", list(_descs()), ids=lambda d: d.scheme)
def test_round_trip(desc):
    text = persist.dumps(desc)
    back = persist.loads(text)
    assert persist.dumps(back) == text


def _explicit_json():
    return json.loads(persist.dumps(randomized_build(CodeParams(8, 1, Fraction(1, 2)), greedy(8, 1),
                                                     seed=0, verify=False)))


def test_integers_are_strings():
    obj = _explicit_json()
    assert isinstance(obj["M"], str) and isinstance(obj["primes"]["count"], str)


def test_composite_prime_rejected():
    obj = _explicit_json()
    ps = obj["primes"]["list"].split(",")
    ps[0] = "15"
    obj["primes"]["list"] = ",".join(ps)
    with pytest.raises(DescriptorError, match="composite"):
        persist.from_dict(obj)


def test_tampered_prime_rejected():
    obj = _explicit_json()
    ps = obj["primes"]["list"].split(",")
    ps[0], ps[1] = ps[1], ps[0]
    obj["primes"]["list"] = ",".join(ps)
    if ps[0] != ps[1]:
        with pytest.raises(DescriptorError, match="re-derive"):
            persist.from_dict(obj)


def test_truncated_colour_table_rejected():
    obj = _explicit_json()
    obj["inner"]["colors"] = ",".join(obj["inner"]["colors"].split(",")[:-1])
    with pytest.raises(DescriptorError, match="colour table"):
        persist.from_dict(obj)


def test_bad_colouring_rejected():
    obj = _explicit_json()
    cols = obj["inner"]["colors"].split(",")
    obj["inner"]["colors"] = ",".join(["0"] * len(cols))
    with pytest.raises(DescriptorError):
        persist.from_dict(obj)


def test_version_mismatch():
    obj = _explicit_json()
    obj["format_version"] = "0"
    with pytest.raises(DescriptorError, match="version"):
        persist.from_dict(obj)
    with pytest.raises(DescriptorError):
        persist.loads("{not json")


def test_loaded_descriptor_decodes(tmp_path):
    desc = explicit_build(CodeParams(8, 2, Fraction(1, 4)), greedy(8, 2))
    path = tmp_path / "d.json"
    persist.store_descriptor(desc, path)
    back = persist.load_descriptor(path)
    m = BitString("10011100")
    assert back.decode(m[2:], desc.encode_hash(m, 3)) == m
