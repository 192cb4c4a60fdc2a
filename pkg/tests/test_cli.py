import subprocess
import sys

import pytest

from obldel import persist
from obldel.bitseq import BitString, DeletionPattern, apply_pattern, pack_bits
from obldel.channels import ChannelInstance, corrupt
from obldel.cli import main
from obldel.hashtag import HashTag
from obldel.rng import stream


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture(scope="module")
def explicit_desc(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "explicit.json"
    assert run("build", "--scheme", "explicit", "--n", 8, "--t", 2, "--eps", "1/4", "--out", path) == 0
    return path


MESSAGES = ["10110010", "00000000", "11111111", "01010101"]


def test_text_pipeline_matches_in_process(explicit_desc, tmp_path):
    msgs, enc, cor, dec = (tmp_path / f for f in ("m.txt", "e.txt", "c.txt", "d.txt"))
    msgs.write_text("\n".join(MESSAGES) + "\n")
    chan = "oblivious:8:1,2,4,5,7,8:3"
    assert run("encode", "--descriptor", explicit_desc, "--input", msgs, "--out", enc, "--seed", 9) == 0
    assert run("corrupt", "--channel", chan, "--input", enc, "--out", cor) == 0
    assert run("decode", "--descriptor", explicit_desc, "--input", cor, "--out", dec) == 0
    d = persist.load_descriptor(explicit_desc)
    ch = ChannelInstance.parse(chan)
    want = []
    for i, m in enumerate(MESSAGES):
        tag = d.encode_hash(BitString(m), stream(9, "encoding", i))
        z = corrupt(ch, m, i)
        out = d.decode(z, tag)
        want.append("-" if out is None else str(out))
    assert dec.read_text().split() == want
    assert want == MESSAGES


def test_binary_round_trip(explicit_desc, tmp_path):
    msgs = tmp_path / "m.bin"
    msgs.write_bytes(b"".join(b"\x01" + pack_bits(m) for m in MESSAGES))
    enc, cor, dec = tmp_path / "e.bin", tmp_path / "c.bin", tmp_path / "d.bin"
    assert run("encode", "--binary", "--descriptor", explicit_desc, "--input", msgs, "--out", enc) == 0
    assert run("corrupt", "--binary", "--channel", "uniform:8,2:1", "--input", enc, "--out", cor) == 0
    assert run("decode", "--binary", "--descriptor", explicit_desc, "--input", cor, "--out", dec) == 0
    assert dec.read_bytes() == b"".join(b"\x01" + pack_bits(m) for m in MESSAGES)


def test_systematic_and_list_pipeline(tmp_path):
    for scheme, extra in (("systematic-randomized", ()), ("list-wrapped", ("--L", 2, "--inner", "identity"))):
        desc = tmp_path / f"{scheme}.json"
        assert run("build", "--scheme", scheme, "--n", 6, "--t", 1, "--eps", "1/2", *extra, "--out", desc) == 0
        d = persist.load_descriptor(desc)
        src, enc, cor, dec = (tmp_path / f"{scheme}.{k}" for k in "mecd")
        src.write_text("011010\n110001\n")
        assert run("encode", "--descriptor", desc, "--input", src, "--out", enc) == 0
        chan = f"oblivious:{d.length}:{','.join(str(i) for i in range(2, d.length + 1))}:0"
        assert run("corrupt", "--channel", chan, "--input", enc, "--out", cor) == 0
        assert run("decode", "--descriptor", desc, "--input", cor, "--out", dec) == 0
        for got, m in zip(dec.read_text().split(), ("011010", "110001")):
            assert got in (m, "-")


def test_vt_verify_is_clean(tmp_path):
    desc, out = tmp_path / "vt.json", tmp_path / "vt.csv"
    assert run("build", "--scheme", "vt", "--n", 10, "--out", desc) == 0
    assert run("verify", "--descriptor", desc, "--grid", "full", "--out", out) == 0
    assert len(out.read_text().splitlines()) == 1 + 1024 * 10


def test_forced_modulus_violates(tmp_path):
    desc = tmp_path / "bad.json"
    assert run("build", "--scheme", "explicit", "--inner", "identity", "--n", 10, "--t", 1, "--eps", "1/4",
               "--modulus", 64, "--out", desc) == 0
    assert run("verify", "--descriptor", desc, "--out", tmp_path / "o.csv") == 1


def test_empty_grid(explicit_desc, tmp_path):
    out = tmp_path / "e.csv"
    assert run("verify", "--descriptor", explicit_desc, "--grid", "empty", "--out", out) == 0
    assert out.read_text() == "scheme,n,t,eps,m,tau,fail_num,fail_den,bound\n"


def test_usage_errors(explicit_desc, tmp_path):
    assert run("build", "--n", 8) == 2
    assert run("build", "--scheme", "nope") == 2
    assert run("corrupt", "--input", explicit_desc) == 2
    assert run("verify", "--descriptor", tmp_path / "missing.json") == 2
    assert run("verify", "--descriptor", explicit_desc, "--grid", "bogus") == 2
    assert run("report", "--schemes", "existential") == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": "9"}')
    assert run("verify", "--descriptor", bad) == 2


def test_budget_exceeded():
    assert run("analyze", "census", "--n", 30, "--t", 1) == 3


def test_analyze_and_report(tmp_path):
    out = tmp_path / "c.csv"
    assert run("analyze", "census", "--n", 8, "--t", 1, "--ell", 2, "--out", out) == 0
    assert out.read_text().splitlines()[0] == "n,ell,t,count,bound,holds"
    assert run("analyze", "lower-bound", "--n", 16, "--t", 2, "--eps", "1/2", "--out", out) == 0
    assert run("report", "--grid", "n=8;t=1;eps=1/2", "--out", out) == 0
    assert len(out.read_text().splitlines()) == 5


def test_module_entry_point(tmp_path):
    out = tmp_path / "lb.csv"
    r = subprocess.run([sys.executable, "-m", "obldel", "analyze", "lower-bound", "--n", "12", "--t", "1",
                        "--out", str(out)], capture_output=True)
    assert r.returncode == 0, r.stderr
    assert out.exists()
