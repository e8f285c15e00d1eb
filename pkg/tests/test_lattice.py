import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ballcontacts.euclid_core import Vec3, distance
from ballcontacts.lattice import (
    SQRT2,
    Superbase,
    fcc_ball,
    fcc_superbase,
    is_fcc_point,
    voronoi_candidates,
)


def test_superbase_is_obtuse_and_unimodular():
    sb = fcc_superbase()
    vs = sb.vectors()
    total = vs[0] + vs[1] + vs[2] + vs[3]
    assert total.norm() < 1e-9
    for i in range(4):
        for j in range(i + 1, 4):
            assert vs[i].dot(vs[j]) <= 1e-9
    det = vs[1].dot(vs[2].cross(vs[3]))
    # integer determinant +-2, scaled by sqrt(2)^3
    assert abs(det) == pytest.approx(2.0 * SQRT2**3)
    for v in vs:
        assert v.norm() == pytest.approx(2.0)


def test_superbase_frozen_vectors():
    vs = fcc_superbase().vectors()
    ints = {
        tuple(round(c / SQRT2) for c in v.as_tuple()) for v in vs
    }
    assert ints == {(-1, 0, -1), (1, 1, 0), (1, -1, 0), (-1, 0, 1)}


def test_superbase_validation():
    v = Vec3(SQRT2, SQRT2, 0.0)
    with pytest.raises(ValueError):
        Superbase(v, v, -v, -v)  # degenerate, zero determinant


def test_voronoi_candidates():
    report = voronoi_candidates(fcc_superbase())
    assert len(report.vectors) == 14
    assert len(report.lengths) == 14
    assert report.count_length_two == 12
    others = [x for x in report.lengths if abs(x - 2.0) > 1e-9]
    assert len(others) == 2
    for x in others:
        assert x == pytest.approx(2.0 * SQRT2)
    # candidates come in opposite pairs
    tuples = [v.as_tuple() for v in report.vectors]
    for t in tuples:
        assert tuple(-c for c in t) in tuples


def test_fcc_ball_sizes():
    assert len(fcc_ball(1.0)) == 1
    assert len(fcc_ball(2.0)) == 13
    assert len(fcc_ball(2.5)) == 13
    assert len(fcc_ball(4.0)) == 55


def test_fcc_ball_min_distance_and_membership():
    pts = fcc_ball(3.0)
    dmin = min(
        distance(pts[i], pts[j])
        for i in range(len(pts)) for j in range(i + 1, len(pts))
    )
    assert abs(dmin - 2.0) < 1e-12
    for p in pts:
        assert is_fcc_point(p)


def test_fcc_ball_deterministic_order():
    a = fcc_ball(3.0)
    b = fcc_ball(3.0)
    assert [p.as_tuple() for p in a] == [p.as_tuple() for p in b]
    tuples = [p.as_tuple() for p in a]
    assert tuples == sorted(tuples)


def test_fcc_ball_rejects_bad_radius():
    with pytest.raises(ValueError):
        fcc_ball(-1.0)


def test_is_fcc_point():
    assert is_fcc_point(Vec3(0.0, 0.0, 0.0))
    assert is_fcc_point(Vec3(SQRT2, SQRT2, 0.0))
    assert not is_fcc_point(Vec3(SQRT2, 0.0, 0.0))   # odd coordinate sum
    assert not is_fcc_point(Vec3(0.3, 0.2, 0.1))
    assert not is_fcc_point(Vec3(SQRT2 + 1e-6, SQRT2, 0.0))


_pool = fcc_ball(4.0)


@given(st.integers(0, len(_pool) - 1), st.integers(0, len(_pool) - 1))
def test_fcc_closed_under_addition(i, j):
    s = _pool[i] + _pool[j]
    assert is_fcc_point(s)
    d = _pool[i] - _pool[j]
    assert is_fcc_point(d)
