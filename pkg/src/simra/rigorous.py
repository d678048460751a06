"""Adaptive-precision enclosure arithmetic over exact rationals.

A RigorousReal is an immutable handle on a real number given by a descriptor
(exact rational, decimal literal with its stated uncertainty, isolated
algebraic root, or an expression tree over those).  Every handle carries a
certified enclosure [lo, hi] containing the value; refinement produces a new
handle with a tighter enclosure and never widens an earlier one.

All endpoint arithmetic is exact (fractions.Fraction / big ints).  Only square
roots and algebraic-root isolation introduce outward dyadic rounding, which is
driven below any requested radius by raising the working precision.  The
working precision escalates by doubling, starting at 64 bits, up to a
configurable hard cap (default 2**16 bits, env SIMRA_PRECISION_CAP).
"""

from __future__ import annotations

import os
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .errors import DomainError, NoSignChange, NotSquareFree, PrecisionCapExceeded

Rational = Union[int, Fraction]

_DEFAULT_CAP = 1 << 16
_START_BITS = 64

_precision_cap = int(os.environ.get("SIMRA_PRECISION_CAP", _DEFAULT_CAP))


def get_precision_cap() -> int:
    return _precision_cap


def set_precision_cap(bits: int) -> None:
    global _precision_cap
    if bits < _START_BITS:
        raise DomainError(f"precision cap must be >= {_START_BITS} bits")
    _precision_cap = int(bits)


class Comparison(Enum):
    LESS = -1
    INDISTINGUISHABLE = 0
    GREATER = 1


# ---------------------------------------------------------------------------
# integer polynomial utilities (coefficients low degree first)

def _ptrim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pderiv(coeffs: Sequence[int]) -> tuple[int, ...]:
    return _ptrim([i * coeffs[i] for i in range(1, len(coeffs))])


def _peval(coeffs: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _psign_at(coeffs: Sequence[int], num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, via an all-integer Horner scheme."""
    d = len(coeffs) - 1
    acc = 0
    denpow = 1
    # sum c_i num^i den^(d-i), built highest degree first
    for i in range(d, -1, -1):
        acc = acc * num + coeffs[i] * denpow
        if i > 0:
            denpow *= den
    return (acc > 0) - (acc < 0)


def _pdivmod_q(a: Sequence[Fraction], b: Sequence[Fraction]):
    """Long division over Q; returns (quotient, remainder)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - db
        if shift < 0:
            break
        coef = a[-1] / lb
        q[shift] = coef
        for i in range(db + 1):
            a[shift + i] -= coef * b[i]
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def _pprimitive(coeffs: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational polynomial to a primitive integer one (positive lead)."""
    from math import gcd, lcm

    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return ()
    mult = lcm(*[x.denominator for x in c])
    ints = [int(x * mult) for x in c]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _pgcd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """gcd of two integer polynomials, returned primitive."""
    fa = [Fraction(c) for c in _ptrim(a)]
    fb = [Fraction(c) for c in _ptrim(b)]
    while fb and any(fb):
        _, r = _pdivmod_q(fa, fb)
        fa, fb = fb, r
        while len(fb) > 1 and fb[-1] == 0:
            fb.pop()
        if len(fb) == 1 and fb[0] == 0:
            fb = []
    return _pprimitive(fa)


def _sturm_chain(coeffs: Sequence[int]) -> list[tuple[int, ...]]:
    chain = [_ptrim(coeffs), _pderiv(coeffs)]
    while chain[-1] and len(chain[-1]) > 1:
        fa = [Fraction(c) for c in chain[-2]]
        fb = [Fraction(c) for c in chain[-1]]
        _, r = _pdivmod_q(fa, fb)
        r = [-x for x in r]
        prim = _pprimitive(r)
        if not prim:
            break
        # keep the sign of the remainder when making it primitive
        if r and r[-1] != 0 and (r[-1] > 0) != (prim[-1] > 0):
            prim = tuple(-v for v in prim)
        chain.append(prim)
    return [p for p in chain if p]


def _variations(chain: list[tuple[int, ...]], x: Fraction) -> int:
    signs = []
    for p in chain:
        s = _psign_at(p, x.numerator, x.denominator)
        if s != 0:
            signs.append(s)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def count_real_roots(coeffs: Sequence[int], lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots of the polynomial in (lo, hi].

    Endpoints must not be roots of the polynomial itself.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    chain = _sturm_chain(coeffs)
    return _variations(chain, lo) - _variations(chain, hi)


# ---------------------------------------------------------------------------
# exact interval helpers

def _frac_floor_scaled(q: Fraction, bits: int) -> int:
    return (q.numerator << bits) // q.denominator


def _frac_ceil_scaled(q: Fraction, bits: int) -> int:
    return -((-q.numerator << bits) // q.denominator)


def _sqrt_lower(q: Fraction, bits: int) -> Fraction:
    n = (q.numerator << (2 * bits)) // q.denominator
    return Fraction(isqrt(n), 1 << bits)


def _sqrt_upper(q: Fraction, bits: int) -> Fraction:
    m = -((-q.numerator << (2 * bits)) // q.denominator)
    s = isqrt(m)
    if s * s < m:
        s += 1
    return Fraction(s, 1 << bits)


def _exact_sqrt(q: Fraction):
    """Return sqrt(q) as a Fraction when q is a perfect rational square."""
    sn, sd = isqrt(q.numerator), isqrt(q.denominator)
    if sn * sn == q.numerator and sd * sd == q.denominator:
        return Fraction(sn, sd)
    return None


class _NeedPrecision(Exception):
    """Internal: interval op needs tighter children (e.g. divisor straddles 0)."""


# ---------------------------------------------------------------------------
# descriptors

class _Desc:
    __slots__ = ("_cache",)

    def __init__(self):
        self._cache = None  # (bits, lo, hi, saturated)

    saturated_leaf = False

    def enclosure(self, bits: int, cap: int) -> tuple[Fraction, Fraction, bool]:
        """Best-effort enclosure targeting radius <= 2^-bits * max(1, |mid|).

        Never raises for precision reasons; the third element reports whether
        the enclosure is saturated (cannot shrink further).
        """
        cached = self._cache
        if cached is not None and (cached[0] >= bits or cached[3]):
            return cached[1], cached[2], cached[3]
        lo, hi, sat = self._compute(bits, cap)
        if cached is not None:
            lo = max(lo, cached[1])
            hi = min(hi, cached[2])
        self._cache = (bits, lo, hi, sat)
        return lo, hi, sat

    def _compute(self, bits: int, cap: int):
        raise NotImplementedError


class _RationalLeaf(_Desc):
    __slots__ = ("value",)
    saturated_leaf = True

    def __init__(self, value: Fraction):
        super().__init__()
        self.value = value

    def _compute(self, bits, cap):
        return self.value, self.value, True


class _DecimalLeaf(_Desc):
    """A decimal literal with +-0.5 ulp uncertainty on its last stated digit."""

    __slots__ = ("value", "radius")
    saturated_leaf = True

    def __init__(self, value: Fraction, radius: Fraction):
        super().__init__()
        self.value = value
        self.radius = radius

    def _compute(self, bits, cap):
        return self.value - self.radius, self.value + self.radius, True


class _AlgebraicLeaf(_Desc):
    """The unique root of an integer polynomial in an isolating interval.

    State is a dyadic interval [a, b] / 2^p whose endpoints give opposite
    signs of the square-free part, or an exact rational value when a dyadic
    bisection point happens to hit the root.  Refinement is hybrid: interval
    Newton steps (quadratic convergence) with bisection as the fallback.
    """

    __slots__ = ("coeffs", "sf", "sfd", "a", "b", "p", "exact")

    def __init__(self, coeffs: Sequence[int], lo: Fraction, hi: Fraction):
        super().__init__()
        coeffs = _ptrim([int(c) for c in coeffs])
        if len(coeffs) < 2:
            raise DomainError("polynomial must have degree >= 1")
        if not lo < hi:
            raise DomainError("isolating interval must satisfy lo < hi")
        s_lo = _psign_at(coeffs, lo.numerator, lo.denominator)
        s_hi = _psign_at(coeffs, hi.numerator, hi.denominator)
        if s_lo == 0 or s_hi == 0:
            raise NoSignChange("an interval endpoint is a root of the polynomial")
        g = _pgcd(coeffs, _pderiv(coeffs))
        if len(g) > 1:
            g_lo = _psign_at(g, lo.numerator, lo.denominator)
            g_hi = _psign_at(g, hi.numerator, hi.denominator)
            if g_lo == 0 or g_hi == 0 or count_real_roots(g, lo, hi) > 0:
                raise NotSquareFree(
                    "polynomial has a repeated root inside the isolating interval"
                )
            q, r = _pdivmod_q([Fraction(c) for c in coeffs],
                              [Fraction(c) for c in g])
            sf = _pprimitive(q)
        else:
            sf = _pprimitive([Fraction(c) for c in coeffs])
        if s_lo * s_hi > 0:
            raise NoSignChange("polynomial has the same sign at both endpoints")
        nroots = count_real_roots(sf, lo, hi)
        if nroots != 1:
            raise NoSignChange(
                f"interval does not isolate a single root (contains {nroots})"
            )
        self.coeffs = coeffs
        self.sf = sf
        self.sfd = _pderiv(sf)
        self.exact = None
        self._init_dyadic(lo, hi)

    def _sf_sign(self, num: int, den_bits: int) -> int:
        return _psign_at(self.sf, num, 1 << den_bits) if den_bits else \
            _psign_at(self.sf, num, 1)

    def _init_dyadic(self, lo: Fraction, hi: Fraction) -> None:
        p = 32
        while True:
            a = _frac_ceil_scaled(lo, p)
            b = _frac_floor_scaled(hi, p)
            if a < b:
                sa = self._sf_sign(a, p)
                sb = self._sf_sign(b, p)
                if sa == 0:
                    self._collapse(Fraction(a, 1 << p))
                    return
                if sb == 0:
                    self._collapse(Fraction(b, 1 << p))
                    return
                if sa != sb:
                    self.a, self.b, self.p = a, b, p
                    return
            p *= 2

    def _collapse(self, value: Fraction) -> None:
        self.exact = value
        self.a = self.b = None
        self.p = None

    def _interval(self) -> tuple[Fraction, Fraction]:
        if self.exact is not None:
            return self.exact, self.exact
        return Fraction(self.a, 1 << self.p), Fraction(self.b, 1 << self.p)

    def _bisect_once(self) -> None:
        self.a, self.b, self.p = self.a * 2, self.b * 2, self.p + 1
        m = (self.a + self.b) // 2
        sm = self._sf_sign(m, self.p)
        if sm == 0:
            self._collapse(Fraction(m, 1 << self.p))
            return
        sa = self._sf_sign(self.a, self.p)
        if sm == sa:
            self.a = m
        else:
            self.b = m

    def _deriv_interval(self) -> tuple[Fraction, Fraction]:
        lo, hi = self._interval()
        vlo = vhi = Fraction(0)
        for c in reversed(self.sfd):
            # interval Horner: v*x + c with x in [lo, hi]
            cands = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
            vlo, vhi = min(cands) + c, max(cands) + c
        return vlo, vhi

    def _newton_once(self) -> bool:
        dlo, dhi = self._deriv_interval()
        if dlo <= 0 <= dhi:
            return False
        m = Fraction(self.a + self.b, 1 << (self.p + 1))
        fm = _peval(self.sf, m)
        if fm == 0:
            self._collapse(m)
            return True
        q1, q2 = fm / dlo, fm / dhi
        nlo, nhi = m - max(q1, q2), m - min(q1, q2)
        lo, hi = self._interval()
        nlo, nhi = max(nlo, lo), min(nhi, hi)
        if not nlo <= nhi:
            return False
        width_old = hi - lo
        width_new = nhi - nlo
        if width_new * 2 > width_old:
            return False
        # re-anchor on a dyadic grid fine enough to keep most of the gain:
        # gain ~ log2(width_old / width_new), from bit lengths, O(1) big-int ops
        if width_new == 0:
            gain = 8192
        else:
            ratio = width_old / width_new
            gain = ratio.numerator.bit_length() - ratio.denominator.bit_length() - 2
        gain = max(4, min(gain, 8192))
        p_new = self.p + gain
        a_new = max(_frac_floor_scaled(nlo, p_new), self.a << (p_new - self.p))
        b_new = min(_frac_ceil_scaled(nhi, p_new), self.b << (p_new - self.p))
        if not a_new < b_new:
            return False
        sa = self._sf_sign(a_new, p_new)
        if sa == 0:
            self._collapse(Fraction(a_new, 1 << p_new))
            return True
        sb = self._sf_sign(b_new, p_new)
        if sb == 0:
            self._collapse(Fraction(b_new, 1 << p_new))
            return True
        if sa == sb:
            return False
        self.a, self.b, self.p = a_new, b_new, p_new
        return True

    def _compute(self, bits, cap):
        if self.exact is not None:
            return self.exact, self.exact, True
        target = None
        while self.exact is None:
            lo, hi = self._interval()
            mid_mag = abs(lo + hi) / 2
            target = Fraction(1, 1 << bits) * max(Fraction(1), mid_mag)
            if hi - lo <= 2 * target:
                return lo, hi, False
            if not self._newton_once():
                self._bisect_once()
        return self.exact, self.exact, True


class _Expr(_Desc):
    __slots__ = ("op", "args")

    _OPS = frozenset({"add", "sub", "mul", "div", "neg", "abs", "max", "sqrt"})

    def __init__(self, op: str, args: Sequence["_Desc"]):
        super().__init__()
        if op not in self._OPS:
            raise DomainError(f"unknown operation {op!r}")
        self.op = op
        self.args = tuple(args)

    def _eval(self, leaf_bits: int, work_bits: int, cap: int):
        vals = []
        for a in self.args:
            if isinstance(a, _Expr):
                vals.append(a._eval(leaf_bits, work_bits, cap))
            else:
                vals.append(a.enclosure(leaf_bits, cap))
        op = self.op
        if op == "add":
            (alo, ahi, asat), (blo, bhi, bsat) = vals
            return alo + blo, ahi + bhi, asat and bsat
        if op == "sub":
            (alo, ahi, asat), (blo, bhi, bsat) = vals
            return alo - bhi, ahi - blo, asat and bsat
        if op == "neg":
            (alo, ahi, asat), = vals
            return -ahi, -alo, asat
        if op == "mul":
            (alo, ahi, asat), (blo, bhi, bsat) = vals
            prods = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
            return min(prods), max(prods), asat and bsat
        if op == "div":
            (alo, ahi, asat), (blo, bhi, bsat) = vals
            if blo <= 0 <= bhi:
                if bsat:
                    raise DomainError("division by an enclosure containing zero")
                raise _NeedPrecision
            quots = (alo / blo, alo / bhi, ahi / blo, ahi / bhi)
            return min(quots), max(quots), asat and bsat
        if op == "abs":
            (alo, ahi, asat), = vals
            if alo >= 0:
                return alo, ahi, asat
            if ahi <= 0:
                return -ahi, -alo, asat
            return Fraction(0), max(-alo, ahi), asat
        if op == "max":
            lo = max(v[0] for v in vals)
            hi = max(v[1] for v in vals)
            # branches certifiably below the max cannot move it: enclosures
            # only shrink inward, so saturation is decided by the survivors
            return lo, hi, all(v[2] for v in vals if v[1] >= lo)
        # sqrt
        (alo, ahi, asat), = vals
        if ahi < 0:
            raise DomainError("square root of a negative enclosure")
        alo = max(alo, Fraction(0))
        if asat and alo == ahi:
            ex = _exact_sqrt(alo)
            if ex is not None:
                return ex, ex, True
        return _sqrt_lower(alo, work_bits), _sqrt_upper(ahi, work_bits), False

    def _compute(self, bits, cap):
        leaf_bits = bits + 16
        best = None
        while True:
            try:
                lo, hi, sat = self._eval(leaf_bits, leaf_bits + 16, cap)
            except _NeedPrecision:
                lo = hi = sat = None
            if lo is not None:
                best = (lo, hi, sat)
                if sat:
                    return best
                mid_mag = abs(lo + hi) / 2
                target = Fraction(1, 1 << bits) * max(Fraction(1), mid_mag)
                if hi - lo <= 2 * target:
                    return lo, hi, False
            if leaf_bits >= 4 * cap:
                if best is None:
                    raise DomainError(
                        "division by an enclosure containing zero at the precision cap"
                    )
                return best
            leaf_bits *= 2


# ---------------------------------------------------------------------------
# public wrapper

class RigorousReal:
    """Immutable handle on a real number with an on-demand certified enclosure."""

    __slots__ = ("_desc", "_lo", "_hi", "_sat")

    def __init__(self, desc: _Desc, bits: int = _START_BITS):
        self._desc = desc
        lo, hi, sat = desc.enclosure(bits, _precision_cap)
        self._lo, self._hi, self._sat = lo, hi, sat

    # -- enclosure views ---------------------------------------------------
    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    @property
    def midpoint(self) -> Fraction:
        return (self._lo + self._hi) / 2

    @property
    def radius(self) -> Fraction:
        return (self._hi - self._lo) / 2

    @property
    def saturated(self) -> bool:
        return self._sat

    @property
    def is_exact(self) -> bool:
        return self._lo == self._hi

    def __float__(self) -> float:
        return float(self.midpoint)

    def __repr__(self) -> str:
        if self.is_exact:
            return f"RigorousReal(exact {self._lo})"
        return f"RigorousReal(~{float(self.midpoint):.12g}, rad~{float(self.radius):.3g})"

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(v) -> "_Desc":
        if isinstance(v, RigorousReal):
            return v._desc
        if isinstance(v, (int, Fraction)):
            return _RationalLeaf(Fraction(v))
        raise TypeError(f"cannot mix RigorousReal with {type(v).__name__}")

    def _binary(self, op, other, swap=False):
        a, b = self._desc, self._coerce(other)
        if swap:
            a, b = b, a
        return RigorousReal(_Expr(op, (a, b)))

    def __add__(self, other):
        return self._binary("add", other)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary("sub", other)

    def __rsub__(self, other):
        return self._binary("sub", other, swap=True)

    def __mul__(self, other):
        return self._binary("mul", other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary("div", other)

    def __rtruediv__(self, other):
        return self._binary("div", other, swap=True)

    def __neg__(self):
        return RigorousReal(_Expr("neg", (self._desc,)))

    def __abs__(self):
        return RigorousReal(_Expr("abs", (self._desc,)))


def rational(value: Union[Rational, str]) -> RigorousReal:
    """Exact rational value (radius 0)."""
    return RigorousReal(_RationalLeaf(Fraction(value)))


def decimal_literal(text: str) -> RigorousReal:
    """A decimal string carrying +-0.5 ulp uncertainty on its last digit.

    '1.5' means the interval [1.45, 1.55]; '2' means [1.5, 2.5].  The radius
    is honest measurement uncertainty, so the enclosure never refines past it.
    """
    text = text.strip()
    value = Fraction(text)
    if "." in text:
        ndigits = len(text.split(".", 1)[1])
    else:
        ndigits = 0
    if "e" in text.lower():
        raise DomainError("exponent notation is not supported in decimal literals")
    radius = Fraction(1, 2 * 10 ** ndigits)
    return RigorousReal(_DecimalLeaf(value, radius))


def algebraic_root(coeffs: Sequence[int], interval) -> RigorousReal:
    """The unique root of the integer polynomial inside the isolating interval.

    coeffs lists the polynomial low degree first.  The interval endpoints must
    give opposite (nonzero) polynomial signs, the polynomial must be square
    free on the interval, and the interval must contain exactly one root.
    """
    lo, hi = interval
    return RigorousReal(_AlgebraicLeaf(coeffs, Fraction(lo), Fraction(hi)))


def sqrt(value) -> RigorousReal:
    """Square root as an enclosure; exact when the input is a perfect square."""
    if isinstance(value, (int, Fraction)):
        q = Fraction(value)
        if q < 0:
            raise DomainError("square root of a negative rational")
        ex = _exact_sqrt(q)
        if ex is not None:
            return rational(ex)
        value = rational(q)
    return RigorousReal(_Expr("sqrt", (RigorousReal._coerce(value),)))


def maximum(*values) -> RigorousReal:
    if not values:
        raise DomainError("maximum of an empty collection")
    return RigorousReal(_Expr("max", tuple(RigorousReal._coerce(v) for v in values)))


def refine(x: RigorousReal, bits: int) -> RigorousReal:
    """A new handle whose radius is <= 2^-bits * max(1, |midpoint|).

    Raises PrecisionCapExceeded when the requested precision is above the cap
    or the value is data-limited (saturated) above the requested radius.
    """
    cap = _precision_cap
    if bits > cap:
        raise PrecisionCapExceeded(f"requested {bits} bits exceeds cap {cap}")
    out = RigorousReal(x._desc, bits)
    target = Fraction(1, 1 << bits) * max(Fraction(1), abs(out.midpoint))
    if out.radius > target:
        raise PrecisionCapExceeded(
            f"could not reach radius 2^-{bits}"
            + (" (value is data-limited)" if out.saturated else
               f" within the {cap}-bit cap")
        )
    return out


def enclosure(x: RigorousReal, bits: int) -> tuple[Fraction, Fraction, bool]:
    """Best-effort enclosure after refining toward radius 2^-bits; never raises.

    Unlike refine, an unreachable target just returns the tightest enclosure
    available (the third element reports saturation).
    """
    lo, hi, sat = x._desc.enclosure(min(bits, _precision_cap), _precision_cap)
    return lo, hi, sat


def compare(x: RigorousReal, y, cap: int | None = None) -> Comparison:
    """Certified three-way comparison.

    Escalates precision by doubling until the enclosures separate; equal
    values (or values closer than the cap permits distinguishing) come back
    INDISTINGUISHABLE, never a wrong strict answer.
    """
    if not isinstance(y, RigorousReal):
        y = rational(Fraction(y))
    if cap is None:
        cap = _precision_cap
    bits = _START_BITS
    while True:
        xlo, xhi, xsat = x._desc.enclosure(bits, cap)
        ylo, yhi, ysat = y._desc.enclosure(bits, cap)
        if xhi < ylo:
            return Comparison.LESS
        if yhi < xlo:
            return Comparison.GREATER
        if (xsat and ysat) or bits >= cap:
            return Comparison.INDISTINGUISHABLE
        bits = min(bits * 2, cap)


def sign(x: RigorousReal, cap: int | None = None) -> int | None:
    """Certified sign: -1, 0 (exactly zero), +1, or None when undecidable."""
    if x.is_exact:
        v = x.lo
        return (v > 0) - (v < 0)
    c = compare(x, 0, cap)
    if c is Comparison.LESS:
        return -1
    if c is Comparison.GREATER:
        return 1
    lo, hi, sat = x._desc.enclosure(cap or _precision_cap, cap or _precision_cap)
    if lo == hi == 0:
        return 0
    return None


def dyadic_bounds(x: RigorousReal, bits: int) -> tuple[int, int]:
    """Integers (lo, hi) with x in [lo, hi] / 2^bits."""
    lo, hi, _ = x._desc.enclosure(bits, _precision_cap)
    return _frac_floor_scaled(lo, bits), _frac_ceil_scaled(hi, bits)
