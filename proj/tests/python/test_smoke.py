"""End-to-end smoke tests for the _slpgram extension module."""

import pytest

import slpgram

FIG = "SLP 7 7\n1 T 97\n2 T 98\n3 P 1 2\n4 P 1 3\n5 P 3 4\n6 P 4 5\n7 P 6 5\n"


def test_count_qgrams_on_example():
    assert slpgram.count_qgrams(FIG, 2) == {b"aa": 3, b"ab": 5, b"ba": 4}
    assert slpgram.count_qgrams(FIG, 3) == {b"aab": 3, b"aba": 2, b"bab": 2, b"baa": 2}
    assert slpgram.count_qgrams(FIG, 14) == {}


def test_pipeline_matches_oracle():
    assert slpgram.count_qgrams(FIG, 4) == slpgram.oracle_count(FIG, 4)
    assert slpgram.verify(FIG, 5)


def test_build_roundtrip():
    data = b"the quick brown fox jumps over the lazy dog" * 50
    for method in ("balanced", "pairs"):
        slp = slpgram.build(data, method=method)
        assert slpgram.decompress(slp, limit=1 << 20) == data
        assert slpgram.verify(slp, 3)


def test_info_and_errors():
    meta = slpgram.info(FIG)
    assert (meta["n"], meta["root"], meta["length"]) == (7, 7, 13)

    with pytest.raises(ValueError):
        slpgram.decompress(FIG, limit=5)
    with pytest.raises(ValueError):
        slpgram.count_qgrams("SLP 1 1\n1 T 300\n", 2)
    with pytest.raises(ValueError):
        slpgram.build(b"")
