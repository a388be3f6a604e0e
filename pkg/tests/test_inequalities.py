from fractions import Fraction as F

import pytest

from convexkit.bodies import axis_segment, box, diamond, unit_cube, unit_square
from convexkit.errors import LambdaRangeError, LowerDimensionalError, ZeroVolumeError
from convexkit.geometry import scale, translate
from convexkit.inequalities import (
    Verdict,
    bm_check,
    concavity_profile,
    derivative_identity_check,
    minkowski_check,
    mmv_implies_bm_trace,
    normalized_check,
    profile_polynomial,
)


def test_bm_strict_rectangle(square, rect):
    r = bm_check(square, rect, F(1, 2))
    assert r.verdict is Verdict.STRICT
    assert r.quantities["volume_mix"] == F(3, 2)
    # sqrt(3/2) - (1 + sqrt 2)/2 = 0.017638...
    assert r.slack_numeric.startswith("0.01763809")


def test_bm_equality_translates(square):
    r = bm_check(square, translate(square, (5, 5)), F(3, 10))
    assert r.verdict is Verdict.EQUALITY


def test_bm_equality_homothety(square):
    r = bm_check(square, translate(scale(square, 3), (1, 1)), F(1, 2))
    assert r.verdict is Verdict.EQUALITY
    assert r.quantities["volume_mix"] == 4


def test_bm_validation(square):
    with pytest.raises(LambdaRangeError):
        bm_check(square, square, F(3, 2))
    with pytest.raises(LowerDimensionalError):
        bm_check(square, axis_segment(2, 0), F(1, 2))


def test_minkowski_strict(square, dia):
    r = minkowski_check(square, dia)
    assert r.verdict is Verdict.STRICT
    assert (r.lhs_exact, r.rhs_exact) == (4, 2)


def test_minkowski_equality_homothety(square):
    r = minkowski_check(square, translate(scale(square, 2), (7, 0)))
    assert r.verdict is Verdict.EQUALITY


def test_minkowski_degenerate_trivial(square):
    r = minkowski_check(axis_segment(2, 0), square)
    assert r.degenerate
    assert r.verdict is Verdict.EQUALITY  # trivial-case convention
    assert r.rhs_exact == 0


def test_normalized_quotients(square, dia, cube):
    assert normalized_check(square, square).lhs_exact == 1
    r = normalized_check(square, dia)
    assert r.verdict is Verdict.STRICT and r.lhs_exact == 2
    r2 = normalized_check(cube, box(2, 1, F(1, 2)))
    assert r2.verdict is Verdict.STRICT
    assert r2.lhs_exact == F(343, 216)  # (7/6)^3 over unit volumes
    with pytest.raises(ZeroVolumeError):
        normalized_check(axis_segment(2, 0), square)


def test_concavity_profile_translates(square):
    p = concavity_profile(square, translate(square, (1, 0)), (0, F(1, 2), 1))
    assert [f for _, f in p.samples] == [1, 1, 1]
    assert all(c.holds for c in p.certificates)


def test_concavity_profile_rectangle(square, rect):
    p = concavity_profile(square, rect, (0, F(1, 2), 1))
    assert [f for _, f in p.samples] == [1, F(3, 2), 2]
    assert all(c.holds and c.exact for c in p.certificates)


def test_concavity_profile_homothety_affine_roots(square):
    p = concavity_profile(square, scale(square, 2), (0, F(1, 2), 1))
    assert [f for _, f in p.samples] == [1, F(9, 4), 4]
    assert [r[:6] for r in p.root_renderings] == ["1.0000", "1.5000", "2.0000"]


def test_concavity_default_grid(square, rect):
    p = concavity_profile(square, rect)
    assert len(p.samples) == 9
    assert len(p.certificates) == 7
    assert all(c.holds for c in p.certificates)


def test_profile_polynomial_expansion(square, rect):
    # f(t) = V((1-t)S + tR) = (1+t) exactly: area of [0,1+t] x [0,1].
    assert profile_polynomial(square, rect) == (1, 1, 0)


def test_derivative_identity(square, dia, cube):
    assert derivative_identity_check(square, square) == 0
    assert derivative_identity_check(square, dia) == 0
    assert derivative_identity_check(cube, translate(cube, (1, 2, 3))) == 0


def test_derivative_value_from_mixed_volume(square, dia):
    # f'(0) = -n V(K) + n V_{n-1,1}(K, L) = -2 + 2*2 = 2 for the diamond.
    coeffs = profile_polynomial(square, dia)
    assert coeffs[1] == 2


def test_mmv_implies_bm_trace(square, rect, cube):
    tr = mmv_implies_bm_trace(square, rect, F(1, 2))
    assert tr.volume_mix == F(3, 2)
    assert (tr.term_first, tr.term_second) == (F(5, 4), F(7, 4))
    assert tr.identity_holds and tr.bound_first_holds and tr.bound_second_holds
    tr2 = mmv_implies_bm_trace(square, square, F(2, 7))
    assert tr2.identity_holds and tr2.volume_mix == 1
    tr3 = mmv_implies_bm_trace(cube, scale(cube, 2), F(1, 2))
    assert tr3.volume_mix == F(27, 8)
    assert (tr3.term_first, tr3.term_second) == (F(9, 4), F(9, 2))
    assert tr3.identity_holds
