"""Enclosure arithmetic: exactness, certified comparisons, refinement."""

import random
from fractions import Fraction

import pytest

from simra import rigorous
from simra.errors import DomainError, NoSignChange, NotSquareFree, PrecisionCapExceeded
from simra.rigorous import (
    Comparison,
    algebraic_root,
    compare,
    count_real_roots,
    decimal_literal,
    enclosure,
    maximum,
    rational,
    refine,
    sign,
    sqrt,
)

SQRT2 = 1.4142135623730951


def contains(x, value):
    v = Fraction(value)
    return x.lo <= v <= x.hi


def test_algebraic_root_sqrt2():
    r = algebraic_root([-2, 0, 1], (1, 2))
    r = refine(r, 80)
    assert float(r) == pytest.approx(SQRT2, abs=1e-15)
    assert r.lo * r.lo < 2 < r.hi * r.hi


def test_algebraic_root_negative_branch():
    r = refine(algebraic_root([-2, 0, 1], (-2, -1)), 80)
    assert float(r) == pytest.approx(-SQRT2, abs=1e-15)


def test_algebraic_root_cbrt2():
    r = refine(algebraic_root([-2, 0, 0, 1], (1, 2)), 80)
    assert float(r) == pytest.approx(1.25992105, abs=1e-8)


def test_algebraic_root_rejects_non_isolating():
    # two roots of x^2 - 2 inside (-2, 2)
    with pytest.raises(NoSignChange):
        algebraic_root([-2, 0, 1], (-2, 2))
    with pytest.raises(NoSignChange):
        algebraic_root([-2, 0, 1], (2, 3))  # same sign at both ends


def test_algebraic_root_rejects_repeated_root():
    # (x^2 - 2)^2 has a double root inside (1, 2)
    with pytest.raises(NotSquareFree):
        algebraic_root([4, 0, -4, 0, 1], (1, 2))


def test_algebraic_root_endpoint_root_rejected():
    with pytest.raises(NoSignChange):
        algebraic_root([-4, 0, 1], (2, 3))


def test_count_real_roots():
    assert count_real_roots([-2, 0, 1], 0, 2) == 1
    assert count_real_roots([-2, 0, 1], -2, 2) == 2
    assert count_real_roots([-2, 0, 1], 3, 4) == 0


def test_rational_is_exact():
    r = rational(Fraction(3, 7))
    assert r.is_exact and r.radius == 0
    assert refine(r, 200).lo == Fraction(3, 7)


def test_sqrt_exact_on_perfect_squares():
    assert sqrt(49).is_exact
    assert sqrt(49).lo == 7
    assert sqrt(Fraction(9, 4)).lo == Fraction(3, 2)
    with pytest.raises(DomainError):
        sqrt(-1)


def test_sum_of_roots():
    s = sqrt(2) + sqrt(3)
    s = refine(s, 80)
    assert float(s) == pytest.approx(3.14626436, abs=1e-8)


def test_refine_radius_contract():
    r = refine(sqrt(2), 100)
    assert r.radius <= Fraction(1, 2 ** 100) * max(1, abs(r.midpoint))
    assert r.lo * r.lo < 2 < r.hi * r.hi


def test_refine_beyond_cap_raises():
    cap = rigorous.get_precision_cap()
    with pytest.raises(PrecisionCapExceeded):
        refine(sqrt(2), cap + 1)


def test_decimal_literal_uncertainty():
    d = decimal_literal("1.5")
    assert (d.lo, d.hi) == (Fraction(29, 20), Fraction(31, 20))
    assert d.saturated
    # the radius is data-limited: refining past it must fail loudly
    with pytest.raises(PrecisionCapExceeded):
        refine(d, 20)
    with pytest.raises(DomainError):
        decimal_literal("1.5e3")


def test_enclosure_never_raises_on_saturated():
    d = decimal_literal("2.25")  # 9/4 with half-ulp radius 1/200
    lo, hi, sat = enclosure(d, 500)
    assert sat and lo == Fraction(449, 200) and hi == Fraction(451, 200)


def test_compare_spec_examples():
    r2 = sqrt(2)
    assert compare(r2, Fraction(3, 2)) is Comparison.LESS
    assert compare(sqrt(2) + sqrt(3), Fraction(22, 7)) is Comparison.GREATER
    # same value through two independently built handles: never a strict answer
    other = algebraic_root([-2, 0, 1], (1, 2))
    assert compare(r2, other) is Comparison.INDISTINGUISHABLE


def test_compare_uses_cap_argument():
    a = sqrt(2)
    b = sqrt(2) + Fraction(1, 2 ** 200)
    assert compare(a, b, cap=64) is Comparison.INDISTINGUISHABLE
    assert compare(a, b, cap=4096) is Comparison.LESS


def test_sign():
    assert sign(rational(-3)) == -1
    assert sign(rational(0)) == 0
    assert sign(sqrt(2) - 1) == 1
    assert sign(sqrt(2) - sqrt(2)) in (0, None)  # exact zero is undecidable here


def test_maximum():
    m = maximum(rational(1), sqrt(2), rational(Fraction(5, 4)))
    assert compare(m, sqrt(2)) is Comparison.INDISTINGUISHABLE
    with pytest.raises(DomainError):
        maximum()


def test_arithmetic_identities():
    x = sqrt(2)
    zero = x - x
    assert contains(zero, 0)
    one = refine(x * x / 2, 80)
    assert contains(one, 1) and one.radius < Fraction(1, 2 ** 70)


def test_coercion_rejects_floats():
    with pytest.raises(TypeError):
        sqrt(2) + 0.5


def random_value(rng, depth=0):
    """A random expression tree together with its exact Fraction value."""
    if depth >= 3 or rng.random() < 0.3:
        q = Fraction(rng.randint(-50, 50), rng.randint(1, 30))
        return rational(q), q
    op = rng.choice("+-*/")
    a, av = random_value(rng, depth + 1)
    b, bv = random_value(rng, depth + 1)
    if op == "+":
        return a + b, av + bv
    if op == "-":
        return a - b, av - bv
    if op == "*":
        return a * b, av * bv
    if bv == 0:
        return a, av
    return a / b, av / bv


def test_enclosure_soundness_random():
    rng = random.Random(20240817)
    for _ in range(1000):
        x, v = random_value(rng)
        assert x.lo <= v <= x.hi
        r = refine(x, 120)
        assert r.lo <= v <= r.hi


def test_monotone_refinement():
    x = sqrt(2) * sqrt(3) - sqrt(5)
    radii = [refine(x, bits).radius for bits in (16, 32, 64, 128, 256)]
    assert all(a >= b for a, b in zip(radii, radii[1:]))
    assert radii[-1] <= Fraction(1, 2 ** 256) * 3


def test_compare_antisymmetry_random():
    rng = random.Random(7)
    flip = {Comparison.LESS: Comparison.GREATER,
            Comparison.GREATER: Comparison.LESS,
            Comparison.INDISTINGUISHABLE: Comparison.INDISTINGUISHABLE}
    for _ in range(200):
        x, xv = random_value(rng)
        y, yv = random_value(rng)
        c = compare(x, y)
        assert compare(y, x) is flip[c]
        if c is Comparison.LESS:
            assert xv < yv
        elif c is Comparison.GREATER:
            assert xv > yv


def test_precision_cap_roundtrip():
    old = rigorous.get_precision_cap()
    try:
        rigorous.set_precision_cap(1 << 10)
        assert rigorous.get_precision_cap() == 1 << 10
        with pytest.raises(DomainError):
            rigorous.set_precision_cap(8)
    finally:
        rigorous.set_precision_cap(old)


def test_dyadic_bounds():
    lo, hi = rigorous.dyadic_bounds(sqrt(2), 16)
    assert lo <= SQRT2 * 2 ** 16 <= hi
    assert hi - lo <= 2
