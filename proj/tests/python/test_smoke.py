import math

import pytest

import thinseq


def test_factorial_sequence():
    seq = thinseq.generate("radial-factorial", count=15)
    assert len(seq) == 15
    assert seq[3].gap == pytest.approx(1 / 6)
    d = thinseq.deltas(seq)
    assert len(d) == 15
    assert all(0 < x < 1 for x in d)


def test_two_point_interpolation():
    seq = thinseq.Sequence.from_points([thinseq.GapPoint(), thinseq.GapPoint.polar(0.5, 0.0)])
    coeffs, norm = thinseq.min_norm_interpolate(seq, 1, 2, [1, 0])
    assert norm == pytest.approx(2.0, rel=1e-12)
    assert len(coeffs) == 2


def test_constants():
    seq = thinseq.generate("radial-superexp", 0.5, 15)
    c, C = thinseq.riesz_bounds(seq, 3, 15)
    assert 0 < c <= 1 <= C
    eis = thinseq.eis_constant(seq, 3, 15)
    assert eis == pytest.approx(1 / math.sqrt(c), rel=1e-10)
    value, err = thinseq.carleson_mu(seq, 3, 15)
    assert value == pytest.approx(C, rel=1e-10)
    assert err >= 0
    assert thinseq.earl_bound(1 / math.sqrt(2)) == pytest.approx(3 + 2 * math.sqrt(2), abs=1e-12)


def test_errors():
    with pytest.raises(ValueError):
        thinseq.earl_bound(0.0)
    with pytest.raises(ValueError):
        thinseq.generate("radial-geometric", 1.5)
    with pytest.raises(ValueError):
        thinseq.analyze_csv("sequence: {kind: radial-geometric, q: 1.5}")


def test_analyze_and_verify():
    csv = thinseq.analyze_csv("grid: {max_level: 16, angles: 32}")
    lines = csv.strip().split("\n")
    assert lines[0].startswith("N,delta_min,delta_min_err,c_N")
    assert len(lines) == 11
    ok, report = thinseq.verify("verify: {suites: [T9]}")
    assert ok
    assert "T9 PASS" in report
