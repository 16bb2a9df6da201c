import json
from fractions import Fraction

import pytest

import dnacode


def test_single_deletion_example():
    assert dnacode.vt_decode("00110", 6, 0) == "001100"
    assert dnacode.vt_syndrome("001100") == 0
    c = dnacode.vt_encode("1011", 7)
    assert len(c) == 7
    assert dnacode.vt_decode(c[:3] + c[4:], 7) == c


def test_weighted_sums():
    residues, moduli = dnacode.weighted_sums("101001")
    assert residues == [3, 28, 106]
    assert moduli == [12, 72, 432]


def test_two_deletion_pipeline():
    data = "1011001110"
    c = dnacode.t_del_encode(data, 2)
    assert dnacode.t_del_decode(c[:2] + c[3:7] + c[8:], 2, len(data)) == data


def test_sliced_roundtrip_with_shuffle():
    lay = dnacode.data_indexed_layout(8, 16, 1)
    data = "10" * (lay["data_bits"] // 2) + "1" * (lay["data_bits"] % 2)
    strands = dnacode.sliced_encode(data, 8, 16, 1)
    assert len(strands) == 8
    reads = list(reversed(strands))
    reads[2] = reads[2][:5] + ("0" if reads[2][5] == "1" else "1") + reads[2][6:]
    assert dnacode.sliced_decode(reads, 8, 16, 1) == data
    assert abs(dnacode.set_redundancy(16.0, 4, 6) - 3.28) < 0.01


def test_duplication_examples():
    assert dnacode.tandem_root("ACCTACTAGGA", 3, "dna") == "ACCTAGGA"
    roots, steps = dnacode.tandem_roots("210121010")
    assert roots == ["210", "2101210"]
    assert steps > 0
    dist = dnacode.polya_exact_dist("0", "rc", 1, 3)
    assert dist["0111"] == Fraction(1, 6)
    assert dist["0101"] == Fraction(1, 3)
    assert sum(dist.values()) == 1
    assert dnacode.irreducible_count(24, 2, 3) == 3285952


def test_dispatcher_matches_cli_contract():
    assert dnacode.run("vt", "decode", {"n": 6, "a": 0}, input="00110\n") == "001100\n"
    a = dnacode.run("dup", "simulate", {"rule": "rc", "k": 2, "x": "00", "steps": 200}, seed=4, format="json")
    b = dnacode.run("dup", "simulate", {"rule": "rc", "k": 2, "x": "00", "steps": 200}, seed=4, format="json")
    assert a == b
    assert json.loads(a)["seed"] == 4


def test_errors_carry_codes():
    with pytest.raises(dnacode.DnacodeError) as info:
        dnacode.vt_decode("0011", 6)
    assert info.value.code == "invalid_argument"
    with pytest.raises(ValueError):
        dnacode.run("vt", "compress")


def test_worked_example_table():
    rows = dnacode.reproduce()
    assert rows
    assert all(r["pass"] for r in rows), [r for r in rows if not r["pass"]]
