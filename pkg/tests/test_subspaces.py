"""Exact lattice saturation, heights, sums/intersections, Schmidt ratios."""

import random
from fractions import Fraction

import pytest

from simra.errors import AmbientMismatch
from simra.subspaces import (
    RationalSubspace,
    full_space,
    gram_det,
    height,
    integer_kernel,
    intersect,
    minor_square_sum,
    orthogonal_complement,
    saturate,
    schmidt_fuzz,
    schmidt_ratio,
    sum_,
    zero_subspace,
)


def span(*vs):
    return saturate(list(vs))


def test_saturate_spec_examples():
    w = span((2, 0, 0), (0, 1, 0))
    assert w.dim == 2 and w.squared_height == 1
    assert sorted(w.basis) == [(0, 1, 0), (1, 0, 0)]

    v = span((1, 2, 3))
    assert v.basis == ((1, 2, 3),) and v.squared_height == 14

    assert span((2, 4, 6)).basis == ((1, 2, 3),)
    assert span((2, 4, 6)).squared_height == 14


def test_saturate_degenerate_inputs():
    assert saturate([], 3).dim == 0
    assert saturate([(0, 0, 0)], 3).dim == 0
    assert saturate([(0, 0, 0)], 3).squared_height == 1  # zero-space convention
    w = span((1, 2), (2, 4), (3, 6))
    assert w.dim == 1 and w.basis == ((1, 2),)


def test_height_examples():
    assert height(full_space(4)).lo == 1
    assert height(zero_subspace(3)).lo == 1
    h = height(span((1, 2, 3)))
    assert float(h) == pytest.approx(14 ** 0.5, abs=1e-10)
    # the x-z coordinate plane through a skew spanning set
    w = span((1, 0, 1), (1, 0, -1))
    assert w.squared_height == 1


def test_member():
    w = span((1, 0, 1), (0, 1, 0))
    assert w.member((2, 3, 2))
    assert not w.member((1, 0, 0))
    with pytest.raises(AmbientMismatch):
        w.member((1, 0))


def test_sum_and_intersect_spec_examples():
    x_axis = span((1, 0, 0))
    y_axis = span((0, 1, 0))
    xy = sum_(x_axis, y_axis)
    assert xy.dim == 2 and xy.squared_height == 1
    assert sum_(x_axis, x_axis) == x_axis

    a, b = span((1, 0, 1)), span((1, 0, -1))
    s = sum_(a, b)
    assert s.dim == 2 and s.squared_height == 1  # the x-z plane

    yz = span((0, 1, 0), (0, 0, 1))
    assert intersect(xy, yz) == y_axis
    assert intersect(xy, xy) == xy

    z = intersect(span((1, 1, 0), (0, 0, 1)), span((1, -1, 0), (0, 0, 1)))
    assert z == span((0, 0, 1))

    with pytest.raises(AmbientMismatch):
        sum_(span((1, 0)), x_axis)


def test_schmidt_ratio_spec_examples():
    xy = span((1, 0, 0), (0, 1, 0))
    z = span((0, 0, 1))
    r = schmidt_ratio(xy, z)
    assert (r["lhsSq"], r["rhsSq"], r["ratioSq"]) == (1, 1, Fraction(1))

    a = span((1, 0, 1))
    assert schmidt_ratio(a, a)["ratioSq"] == 1

    b = span((1, 0, -1))
    r2 = schmidt_ratio(a, b)
    assert r2["lhsSq"] == 1 and r2["rhsSq"] == 4
    assert r2["ratioSq"] == Fraction(1, 4)


def test_grassmann_consistency_random():
    rng = random.Random(99)
    for _ in range(200):
        ambient = rng.randint(2, 5)
        k = rng.randint(1, ambient)
        vecs = [[rng.randint(-6, 6) for _ in range(ambient)] for _ in range(k)]
        w = saturate(vecs, ambient)
        if w.dim == 0:
            continue
        assert gram_det(w.basis) == minor_square_sum(w.basis) == w.squared_height


def test_basis_independence_under_unimodular_moves():
    rng = random.Random(5)
    base = [(1, 2, 0, 3), (0, 1, 1, 1), (2, 0, 1, 0)]
    w = saturate(base, 4)
    for _ in range(50):
        rows = [list(v) for v in base]
        for _ in range(6):
            i, j = rng.sample(range(len(rows)), 2)
            c = rng.randint(-3, 3)
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        again = saturate(rows, 4)
        assert again == w and again.squared_height == w.squared_height


def test_duality_random():
    rng = random.Random(17)
    for _ in range(150):
        ambient = rng.randint(2, 5)
        vecs = [[rng.randint(-9, 9) for _ in range(ambient)]
                for _ in range(rng.randint(1, ambient - 1))]
        w = saturate(vecs, ambient)
        c = orthogonal_complement(w)
        assert c.dim == ambient - w.dim
        assert c.squared_height == w.squared_height
        assert orthogonal_complement(c) == w


def test_integer_kernel():
    k = integer_kernel([(1, 1, 1)], 3)
    w = saturate(k, 3)
    assert w.dim == 2
    assert all(sum(v) == 0 for v in w.basis)
    assert integer_kernel([], 2) == [(1, 0), (0, 1)]


def test_schmidt_fuzz_deterministic():
    a = schmidt_fuzz(max_ambient=4, count=60, seed=3)
    b = schmidt_fuzz(max_ambient=4, count=60, seed=3)
    assert a == b
    assert a["dualityExact"] is True
    assert Fraction(a["maxRatioSq"]) <= 4
    assert len(a["samples"]) == 5


def test_dimension_formula_random():
    # dim(A+B) + dim(A cap B) == dim A + dim B
    rng = random.Random(23)
    for _ in range(100):
        ambient = rng.randint(2, 5)
        mk = lambda: saturate([[rng.randint(-4, 4) for _ in range(ambient)]
                               for _ in range(rng.randint(1, ambient))], ambient)
        a, b = mk(), mk()
        assert (sum_(a, b).dim + intersect(a, b).dim) == a.dim + b.dim
