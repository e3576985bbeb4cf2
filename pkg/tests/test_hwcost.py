from fractions import Fraction

import pytest

from polarsim import (
    critical_path,
    fb_psu_complexity,
    nand_equivalent,
    resource_counts,
    sr_decoder_instance_counts,
)


def test_nand_counts_at_1024():
    assert nand_equivalent("SR", 1024) == 7680
    assert nand_equivalent("IF", 1024) == 8704
    fb = nand_equivalent("FB", 1024)
    assert fb == Fraction(5 * 1024 * 1024, 12) + 3 * 1024
    assert abs(float(fb) - 440_000) / 440_000 < 1e-3


def test_nand_is_exact_rational():
    fb = nand_equivalent("FB", 8)
    assert fb == Fraction(152, 3)
    assert nand_equivalent("IF", 8) == 68


def test_nand_rejects_bad_input():
    with pytest.raises(ValueError):
        nand_equivalent("ROM", 64)
    with pytest.raises(ValueError):
        nand_equivalent("SR", 48)
    with pytest.raises(ValueError):
        nand_equivalent("SR", 2)


def test_sr_resources():
    r = resource_counts("SR", 8)
    assert (r.dff, r.xor, r.and_gates, r.mux) == (8, 6, 3, 0)
    assert r.critical_path == [("AND", 1), ("XOR", 1)]


def test_fb_resources():
    r = resource_counts("FB", 8)
    assert (r.dff, r.xor, r.mux) == (5, 3, 6)
    assert r.nand_equivalent == Fraction(152, 3)


def test_if_resources_unavailable():
    r = resource_counts("IF", 8)
    assert r.dff is r.xor is r.mux is r.and_gates is None
    assert r.critical_path is None
    assert r.nand_equivalent == 68


def test_critical_paths():
    assert critical_path("SR", 16384) == [("AND", 1), ("XOR", 1)]
    assert critical_path("FB", 1024) == [("XOR", 9), ("MUX", 8)]
    assert critical_path("IF", 64) is None


def test_sr_critical_path_constant_in_n():
    paths = {critical_path("SR", 1 << n) and tuple(critical_path("SR", 1 << n))
             for n in range(2, 15)}
    assert paths == {(("AND", 1), ("XOR", 1))}


def test_fb_grows_quadratically_relative_to_sr():
    ratios = [
        nand_equivalent("FB", 1 << n) / nand_equivalent("SR", 1 << n)
        for n in range(6, 15)
    ]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))


def test_sr_beats_if_everywhere():
    for n in range(2, 15):
        assert nand_equivalent("SR", 1 << n) < nand_equivalent("IF", 1 << n)


def test_fb_resource_report_matches_stage_model():
    for n in range(2, 15):
        N = 1 << n
        fb = fb_psu_complexity(N)
        r = resource_counts("FB", N)
        assert (r.dff, r.xor, r.mux) == (fb.dff_count, fb.xor_count, fb.mux_count)
        assert critical_path("FB", N) == [
            ("XOR", fb.critical_xor_depth),
            ("MUX", fb.critical_mux_depth),
        ]


def test_decoder_instance_tally():
    assert sr_decoder_instance_counts(8) == {"dff": 4, "xor": 4, "and": 4}
