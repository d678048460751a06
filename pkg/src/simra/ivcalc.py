"""Certified transcendental evaluation on top of mpmath interval arithmetic.

The exact layer (rigorous.py) handles field operations and square roots; logs
and general powers come from mpmath.iv.  These wrappers convert Fractions and
RigorousReal enclosures into iv intervals without losing the certification:
rationals enter through outward-rounded division, never through float.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import iv, libmp

from . import rigorous

iv.prec = 192  # generous slack so 1e-10 tolerances are never rounding-bound


def frac_enclosure(f):
    """Certified iv enclosure of a single rational."""
    f = Fraction(f)
    return iv.mpf(f.numerator) / iv.mpf(f.denominator)


def frac_interval(lo, hi):
    """Certified iv enclosure of the interval [lo, hi], rational endpoints."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo == hi:
        return frac_enclosure(lo)
    mid = (lo + hi) / 2
    rad = (hi - lo) / 2
    return frac_enclosure(mid) + frac_enclosure(rad) * iv.mpf([-1, 1])


def rig_interval(x, bits: int = 96):
    """iv enclosure of a RigorousReal, refined best-effort toward 2^-bits."""
    lo, hi, _ = rigorous.enclosure(x, bits)
    return frac_interval(lo, hi)


def iv_log(x):
    return iv.log(x)


def iv_pow(x, e):
    if isinstance(e, int):
        return x ** e
    return x ** frac_enclosure(Fraction(e))


def lower(v) -> float:
    """Lower endpoint as a float, rounded down (stays a valid lower bound)."""
    return libmp.to_float(v._mpi_[0], rnd="f")


def upper(v) -> float:
    """Upper endpoint as a float, rounded up (stays a valid upper bound)."""
    return libmp.to_float(v._mpi_[1], rnd="c")


def midpoint_float(v) -> float:
    # float(ivmpf) rounds downward; going through exact endpoint rationals
    # gives the correctly rounded double of the true midpoint
    lo, hi = endpoints_fraction(v)
    return float((lo + hi) / 2)


def endpoints_fraction(v) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an iv value (endpoints are binary floats)."""
    plo, qlo = libmp.to_rational(v._mpi_[0])
    phi, qhi = libmp.to_rational(v._mpi_[1])
    return Fraction(plo, qlo), Fraction(phi, qhi)
