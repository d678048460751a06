"""Exponent estimation and the transference function machinery.

Around a minimal-point sequence live two exponents: the supremum lambda of
the decay rates the envelope attains infinitely often, and the uniform
exponent lambda-hat it attains eventually.  Their finite-X analogues are
step-envelope ratios (-log L_i / log X_i and -log L_i / log X_{i+1}).

A profile packages a decreasing pair (psi, phi) sandwiching the envelope
together with the increasing transfer map theta satisfying phi = psi o theta.
For the power family (psi, phi, theta)(X) = (b X^-beta, a X^-alpha,
(a/b)^(-1/beta) X^(alpha/beta)), the iterated products

    phi_k(X) = phi(theta^k(X)) ... phi(theta(X)) phi(X),
    Phi_k(X) = X phi_k(X) = c_k X^(eps_k),

have exact rational exponents eps_k = 1 - alpha - alpha^2/beta - ... -
alpha^(k+1)/beta^k; the module evaluates both the iterated and the closed
form with certified enclosures and measures the empirical constants that the
transference statements leave ineffective.

The extremal-sequence verifier checks the four structural conditions a
near-equality profile forces on a subsequence of minimal points: two growth
conditions on (norm, error) pairs (with an all-integer exact path when C = 0
and eps = 0), nonvanishing consecutive determinants, and agreement with the
envelope at each norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from mpmath import iv

from . import minpoints, model, rigorous
from .errors import (DomainError, DomainTooShort, SandwichViolated,
                     TooFewPoints)
from .ivcalc import (endpoints_fraction, frac_enclosure, frac_interval,
                     iv_log, iv_pow, lower, midpoint_float, rig_interval,
                     upper)
from .rigorous import RigorousReal

INFINITE = math.inf

RationalLike = Union[int, Fraction, str]


def _frac(v, name: str) -> Fraction:
    try:
        return Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise DomainError(f"{name} must be rational: {e}") from None


# ---------------------------------------------------------------------------
# the Marnat-Moshchevitin left-hand side and its exact epsilon counterpart

def mm_lhs(lambda_hat, lam, n: int):
    """lambda_hat + lambda_hat^2/lam + ... + lambda_hat^n / lam^(n-1).

    lam may be the infinity marker, in which case the value is lambda_hat
    (every higher term carries a vanishing ratio).  Exact for rational
    inputs, enclosure arithmetic for RigorousReal inputs.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    numeric = (int, float, Fraction)
    if isinstance(lambda_hat, numeric) and lambda_hat < 0:
        raise DomainError("lambda_hat must be >= 0")
    if isinstance(lam, numeric) and not math.isinf(lam) \
            and isinstance(lambda_hat, numeric):
        if lam < lambda_hat:
            raise DomainError("lam must be >= lambda_hat (or infinite)")
    if isinstance(lam, float) and math.isinf(lam):
        return lambda_hat
    if isinstance(lambda_hat, numeric) and lambda_hat == 0:
        return Fraction(0) if isinstance(lambda_hat, (int, Fraction)) else 0.0
    # lambda_hat^k / lam^(k-1) = lambda_hat * r^(k-1) with r = lambda_hat/lam
    r = lambda_hat / lam
    acc = r * 0 + 1
    for _ in range(n - 1):
        acc = 1 + r * acc
    return lambda_hat * acc


def eps_threshold(alpha, beta, n: int) -> Fraction:
    """The smallness bound on eps under which the extremal structure appears:
    (1/4n) (alpha/beta)^n min(alpha, beta - alpha)."""
    alpha, beta = _frac(alpha, "alpha"), _frac(beta, "beta")
    if not 0 < alpha <= beta:
        raise DomainError("need 0 < alpha <= beta")
    if n < 1:
        raise DomainError("n must be >= 1")
    return Fraction(1, 4 * n) * (alpha / beta) ** n * min(alpha, beta - alpha)


def epsilon_delta(a, b, alpha, beta, n: int) -> dict:
    """Exact exponents and certified constants of the power-family products.

    Returns eps = 1 - sum alpha^(k+1)/beta^k (exact), the full eps_k ladder,
    delta = the exponent of a/b in the top constant, and enclosures of the
    constants c_k = a^(k+1) (a/b)^(delta_k).

    alpha and beta may be RigorousReal enclosures (algebraic exponents); the
    eps/delta ladders then come back as enclosures and the constants, which
    would need real exponents, are omitted.
    """
    if isinstance(alpha, RigorousReal) or isinstance(beta, RigorousReal):
        if n < 1:
            raise DomainError("n must be >= 1")
        r = alpha / beta
        eps_k = [1 - mm_lhs(alpha, beta, k + 1) for k in range(n)]
        delta_k = []
        delta_acc = r * 0
        inner = r * 0
        rk = r * 0 + 1
        for k in range(n):
            if k >= 1:
                rk = rk * r
                inner = inner + rk
                delta_acc = delta_acc + inner
            delta_k.append(delta_acc)
        return {"eps": eps_k[-1], "delta": delta_k[-1],
                "epsK": eps_k, "deltaK": delta_k, "cK": None}
    a, b = _frac(a, "a"), _frac(b, "b")
    alpha, beta = _frac(alpha, "alpha"), _frac(beta, "beta")
    if min(a, b, alpha, beta) <= 0:
        raise DomainError("a, b, alpha, beta must all be positive")
    if n < 1:
        raise DomainError("n must be >= 1")
    r = alpha / beta
    eps_k: list[Fraction] = []
    delta_k: list[Fraction] = []
    c_k = []
    acc = Fraction(0)       # alpha + alpha^2/beta + ... up to current k
    delta_acc = Fraction(0)  # sum_{j<=k} sum_{i<=j} r^i
    inner = Fraction(0)      # sum_{i<=j} r^i for the current j
    term = alpha
    for k in range(n):
        acc += term
        term *= r
        eps_k.append(1 - acc)
        if k >= 1:
            inner += r ** k
            delta_acc += inner
        delta_k.append(delta_acc)
        ck = iv_pow(frac_enclosure(a), k + 1) * iv_pow(frac_enclosure(a / b),
                                                       delta_acc)
        c_k.append(ck)
    return {
        "eps": eps_k[-1],
        "delta": delta_k[-1],
        "epsK": eps_k,
        "deltaK": delta_k,
        "cK": c_k,
    }


# ---------------------------------------------------------------------------
# profiles

@dataclass(frozen=True)
class TransferenceProfile:
    """A sandwich profile (psi, phi, theta) for an n-dimensional target.

    family "power": phi(X) = a X^-alpha, psi(X) = b X^-beta.
    family "power-log": the same with extra factors log^sigma X and
    log^rho X; theta then has no closed form and is inverted numerically.
    """

    n: int
    a: Fraction
    b: Fraction
    alpha: Fraction
    beta: Fraction
    family: str = "power"
    sigma: Fraction = Fraction(0)
    rho: Fraction = Fraction(0)
    domain_start: Fraction = field(default=Fraction(2))

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("profile needs n >= 1")
        for name in ("a", "b", "alpha", "beta"):
            if getattr(self, name) <= 0:
                raise DomainError(f"profile parameter {name} must be positive")
        if self.alpha > self.beta:
            raise DomainError("profile needs alpha <= beta")
        if self.family not in ("power", "power-log"):
            raise DomainError(f"unknown profile family {self.family!r}")
        if self.family == "power-log":
            # phi, psi must be strictly decreasing from the domain start on:
            # X^-alpha log^sigma X falls iff log X > sigma/alpha
            floor_ = max(
                3.0,
                math.exp(float(self.sigma) / float(self.alpha)) + 1,
                math.exp(float(self.rho) / float(self.beta)) + 1,
            )
            if float(self.domain_start) < floor_:
                object.__setattr__(self, "domain_start",
                                   Fraction(math.ceil(floor_)))

    @classmethod
    def power(cls, n: int, a, b, alpha, beta, domain_start=2
              ) -> "TransferenceProfile":
        return cls(n=n, a=_frac(a, "a"), b=_frac(b, "b"),
                   alpha=_frac(alpha, "alpha"), beta=_frac(beta, "beta"),
                   family="power",
                   domain_start=_frac(domain_start, "domain_start"))

    @classmethod
    def power_log(cls, n: int, a, b, alpha, beta, sigma, rho, domain_start=3
                  ) -> "TransferenceProfile":
        return cls(n=n, a=_frac(a, "a"), b=_frac(b, "b"),
                   alpha=_frac(alpha, "alpha"), beta=_frac(beta, "beta"),
                   family="power-log",
                   sigma=_frac(sigma, "sigma"), rho=_frac(rho, "rho"),
                   domain_start=_frac(domain_start, "domain_start"))

    # -- pointwise evaluation, certified --------------------------------

    def _mono(self, x, coeff: Fraction, expo: Fraction, logexp: Fraction):
        out = frac_enclosure(coeff) * iv_pow(x, -expo)
        if self.family == "power-log" and logexp != 0:
            out = out * iv_pow(iv_log(x), logexp)
        return out

    def phi(self, x):
        x = x if isinstance(x, iv.mpf) else frac_enclosure(Fraction(x))
        return self._mono(x, self.a, self.alpha, self.sigma)

    def psi(self, x):
        x = x if isinstance(x, iv.mpf) else frac_enclosure(Fraction(x))
        return self._mono(x, self.b, self.beta, self.rho)

    def theta(self, x):
        """The transfer map: the unique solution of psi(theta) = phi(X)."""
        if self.family == "power":
            x = x if isinstance(x, iv.mpf) else frac_enclosure(Fraction(x))
            scale = iv_pow(frac_enclosure(self.a / self.b),
                           -1 / Fraction(self.beta))
            return scale * iv_pow(x, self.alpha / self.beta)
        if isinstance(x, iv.mpf):
            # theta is increasing, so endpoint images bracket the image
            xl, xh = endpoints_fraction(x)
            return iv.mpf([self._theta_bisect(xl).a,
                           self._theta_bisect(xh).b])
        return self._theta_bisect(Fraction(x))

    def _theta_bisect(self, x: Fraction):
        """Monotone bisection of psi(t) = phi(x); relative width 1e-12."""
        target = self.phi(x)
        lo = Fraction(self.domain_start)
        while not self._psi_above(lo, target):
            lo /= 2
            if lo < Fraction(1, 10 ** 9):
                raise DomainError("transfer map escapes below any bracket")
        hi = max(x, lo * 2)
        while not self._psi_below(hi, target):
            hi *= 2
            if hi > 10 ** 60:
                raise DomainError("transfer map escapes above any bracket")
        while (hi - lo) > hi * Fraction(1, 10 ** 13):
            mid = (lo + hi) / 2
            pm = self.psi(mid)
            if upper(pm) < lower(target):
                hi = mid
            elif lower(pm) > upper(target):
                lo = mid
            else:
                break  # enclosures overlap: mid is already indistinguishable
        return frac_interval(lo, hi)

    def _psi_above(self, t: Fraction, target) -> bool:
        return lower(self.psi(t)) >= upper(target)

    def _psi_below(self, t: Fraction, target) -> bool:
        return upper(self.psi(t)) <= lower(target)


def phi_functions(profile: TransferenceProfile, k: int, x) -> dict:
    """phi_k and Phi_k at x, via iterated composition; for the power family
    also through the closed form c_k x^(eps_k), with an agreement check.
    """
    if not 0 <= k <= profile.n - 1:
        raise DomainError(f"k={k} outside 0..{profile.n - 1}")
    x = Fraction(x)
    if x < profile.domain_start:
        raise DomainError(
            f"X={x} below the profile domain start {profile.domain_start}"
        )
    xi = frac_enclosure(x)
    phik = profile.phi(xi)
    t = xi
    for _ in range(k):
        t = profile.theta(t)
        phik = phik * profile.phi(t)
    big_phik = xi * phik
    out = {"phiK": phik, "PhiK": big_phik, "PhiKClosed": None}
    if profile.family == "power":
        ed = epsilon_delta(profile.a, profile.b, profile.alpha, profile.beta,
                           profile.n)
        closed = ed["cK"][k] * iv_pow(xi, ed["epsK"][k])
        out["PhiKClosed"] = closed
        if upper(big_phik) < lower(closed) or upper(closed) < lower(big_phik):
            raise DomainError(
                "iterated and closed-form evaluations are certifiably "
                f"disjoint at X={x}, k={k}: implementation bug"
            )
    return out


# ---------------------------------------------------------------------------
# exponent estimation

@dataclass
class ExponentEstimate:
    n: int
    lambda_est: float
    lambda_hat_est: float
    lambda_enclosure: tuple[float, float]
    lambda_hat_enclosure: tuple[float, float]
    window_start: int
    window_size: int
    ordinary_series: list[float]
    uniform_series: list[float]


def _half_log_norm_sq(norm_sq) -> "iv.mpf":
    return iv_log(frac_enclosure(Fraction(norm_sq))) / 2


def estimate_exponents_from_pairs(pairs: Sequence[tuple], n: int,
                                  tail_fraction=Fraction(1, 2)
                                  ) -> ExponentEstimate:
    """Step-envelope exponent estimates from (squared norm, error) pairs.

    lambda_est is the max over the tail of -log L_i / log X_i, the uniform
    estimate the min of -log L_i / log X_{i+1}.  The tail window is the last
    tail_fraction of the entries, widened to 10 when the fraction gives
    fewer; sequences shorter than 10 raise TooFewPoints.
    """
    f = Fraction(tail_fraction)
    if not 0 < f <= 1:
        raise DomainError("tail_fraction must be in (0, 1]")
    m = len(pairs)
    usable = [i for i in range(m) if Fraction(pairs[i][0]) > 1]
    if len(usable) < 10:
        raise TooFewPoints(
            f"exponent estimation needs >= 10 usable entries, got {len(usable)}"
        )
    want = max(10, math.ceil(m * f))
    window = usable[-min(want, len(usable)):]

    ords: list = []
    unis: list = []
    for i in window:
        norm_sq, l_val = pairs[i][0], pairs[i][1]
        li = l_val if isinstance(l_val, iv.mpf) else (
            rig_interval(l_val) if isinstance(l_val, RigorousReal)
            else frac_enclosure(Fraction(l_val)))
        neg_log_l = -iv_log(li)
        ords.append(neg_log_l / _half_log_norm_sq(norm_sq))
        if i + 1 < m:
            unis.append(neg_log_l / _half_log_norm_sq(pairs[i + 1][0]))
    if not unis:
        raise TooFewPoints("the tail window has no successor entries")

    lam = ords[0]
    for v in ords[1:]:
        lam = iv.mpf([max(lam.a, v.a), max(lam.b, v.b)])
    hat = unis[0]
    for v in unis[1:]:
        hat = iv.mpf([min(hat.a, v.a), min(hat.b, v.b)])
    return ExponentEstimate(
        n=n,
        lambda_est=midpoint_float(lam),
        lambda_hat_est=midpoint_float(hat),
        lambda_enclosure=(lower(lam), upper(lam)),
        lambda_hat_enclosure=(lower(hat), upper(hat)),
        window_start=window[0],
        window_size=len(window),
        ordinary_series=[midpoint_float(v) for v in ords],
        uniform_series=[midpoint_float(v) for v in unis],
    )


def estimate_exponents(seq: minpoints.MinimalPointSequence,
                       tail_fraction=Fraction(1, 2)) -> ExponentEstimate:
    pairs = [(e.norm_sq, e.l_value) for e in seq.entries]
    return estimate_exponents_from_pairs(pairs, seq.target.n, tail_fraction)


# ---------------------------------------------------------------------------
# sandwich verification

def _geometric_grid(a: Fraction, b: Fraction, count: int) -> list[Fraction]:
    """A deterministic, roughly geometric rational grid from a to b."""
    if count < 2 or b <= a:
        return [a] if b == a else [a, b]
    la, lb = math.log(float(a)), math.log(float(b))
    xs = [a]
    for j in range(1, count - 1):
        x = Fraction(math.exp(la + (lb - la) * j / (count - 1)))
        x = x.limit_denominator(10 ** 9)
        if xs[-1] < x < b:
            xs.append(x)
    xs.append(b)
    return xs


def check_sandwich(seq: minpoints.MinimalPointSequence,
                   profile: TransferenceProfile, grid_count: int = 64) -> dict:
    """Certified psi <= envelope <= phi over a geometric grid of [A, X_max],
    monotonicity of every product Phi_k, the grid minimum of the top product,
    and the two tail consequences the sandwich forces on consecutive entries
    (error below phi at the next norm, norm above theta of the next norm).

    A certified violation of the sandwich raises SandwichViolated with the
    witness X; everything else is reported, not asserted.
    """
    a0 = profile.domain_start
    if seq.x_max <= a0 * 2:
        raise DomainTooShort(
            f"certified range ends at {seq.x_max}, needs to pass {a0 * 2} "
            f"(domain starts at {a0})"
        )
    n = profile.n
    grid = _geometric_grid(a0, Fraction(seq.x_max), grid_count)

    grid_report = []
    for x in grid:
        env = minpoints.envelope(seq, x)
        phi_x, psi_x = profile.phi(x), profile.psi(x)
        if not isinstance(env, RigorousReal):
            raise SandwichViolated(
                f"no approximant of norm <= {float(x):.6g}: "
                "envelope is infinite inside the profile domain",
                witness=x,
            )
        env_iv = rig_interval(env)
        if upper(env_iv) < lower(psi_x):
            raise SandwichViolated(
                f"envelope at X={float(x):.6g} is certifiably below psi",
                witness=x,
            )
        if lower(env_iv) > upper(phi_x):
            raise SandwichViolated(
                f"envelope at X={float(x):.6g} is certifiably above phi",
                witness=x,
            )
        grid_report.append({
            "X": float(x),
            "psi": midpoint_float(psi_x),
            "envelope": midpoint_float(env_iv),
            "phi": midpoint_float(phi_x),
        })

    # monotonicity of the Phi_k: analytic for the power family, grid scan
    # (flagged heuristic) otherwise
    mono = []
    phi_minima = {}
    ed = None
    if profile.family == "power":
        ed = epsilon_delta(profile.a, profile.b, profile.alpha, profile.beta, n)
        for k in range(n):
            e_k = ed["epsK"][k]
            direction = ("increasing" if e_k > 0 else
                         "decreasing" if e_k < 0 else "constant")
            mono.append({"k": k, "direction": direction, "heuristic": False,
                         "requiredIncreasingPasses": e_k >= 0 if k <= n - 2
                         else None})
    sample = grid[:: max(1, len(grid) // 16)]
    for k in range(n):
        vals = [midpoint_float(phi_functions(profile, k, x)["PhiK"])
                for x in sample]
        phi_minima[k] = {"min": min(vals),
                         "atX": float(sample[vals.index(min(vals))])}
        if profile.family != "power":
            nondec = all(u <= v * (1 + 1e-12) for u, v in zip(vals, vals[1:]))
            noninc = all(u >= v * (1 - 1e-12) for u, v in zip(vals, vals[1:]))
            mono.append({"k": k,
                         "direction": ("increasing" if nondec else
                                       "decreasing" if noninc else
                                       "not monotone on grid"),
                         "heuristic": True})

    # tail consequences on consecutive entries with norms inside the domain
    consequences = []
    for e, nxt in zip(seq.entries, seq.entries[1:]):
        if Fraction(e.norm_sq) < a0 * a0:
            continue
        x_next = rig_interval(nxt.x_value)
        li = rig_interval(e.l_value)
        phi_next = profile.phi(x_next)
        theta_next = profile.theta(x_next)
        x_cur = rig_interval(e.x_value)
        consequences.append({
            "i": e.index,
            "errorBelowPhiNext": not lower(li) > upper(phi_next),
            "normAboveThetaNext": not upper(x_cur) < lower(theta_next),
        })

    report = {
        "profile": describe_profile(profile),
        "grid": grid_report,
        "gridCount": len(grid),
        "monotonicity": mono,
        "phiProductMinima": phi_minima,
        "empiricalC": phi_minima[n - 1]["min"],
        "consequencesHold": all(c["errorBelowPhiNext"] and
                                c["normAboveThetaNext"]
                                for c in consequences),
        "consequences": consequences,
    }
    if ed is not None:
        report["eps"] = ed["eps"]
        report["epsNonnegative"] = ed["eps"] >= 0
        report["delta"] = ed["delta"]
    return report


def describe_profile(profile: TransferenceProfile) -> dict:
    out = {
        "n": profile.n,
        "family": profile.family,
        "a": str(profile.a),
        "b": str(profile.b),
        "alpha": str(profile.alpha),
        "beta": str(profile.beta),
        "domainStart": str(profile.domain_start),
    }
    if profile.family == "power-log":
        out["sigma"] = str(profile.sigma)
        out["rho"] = str(profile.rho)
    return out


# ---------------------------------------------------------------------------
# the Lemma 4.1-style product chain on built families

def lemma41_check(seq: minpoints.MinimalPointSequence, indices: Sequence[int],
                  profile: TransferenceProfile) -> dict:
    """Certified check of the product chain at full depth: the product of
    Phi_0 over the successors of the jump indices stays below the norm
    product times the top Phi at the last successor."""
    n = profile.n
    idx = list(indices)
    if len(idx) != n:
        raise DomainError(f"{len(idx)} indices for a profile with n={n}")
    entries = seq.entries
    lhs = None
    for i in idx:
        z = rig_interval(entries[i + 1].x_value)
        term = z * profile.phi(z)
        lhs = term if lhs is None else lhs * term
    rhs = None
    for i in idx[1:]:
        y = rig_interval(entries[i].x_value)
        rhs = y if rhs is None else rhs * y
    z_last = Fraction(entries[idx[-1] + 1].norm_sq)
    top = phi_functions_at_sq(profile, n - 1, z_last)
    rhs = top if rhs is None else rhs * top
    return {
        "indices": idx,
        "lhs": midpoint_float(lhs),
        "rhs": midpoint_float(rhs),
        "certifiedPass": upper(lhs) <= lower(rhs),
        "certifiedFail": lower(lhs) > upper(rhs),
    }


def phi_functions_at_sq(profile: TransferenceProfile, k: int, x_sq: Fraction):
    """Phi_k evaluated at sqrt(x_sq) without leaving certified arithmetic."""
    xi = iv_pow(frac_enclosure(x_sq), Fraction(1, 2))
    phik = profile.phi(xi)
    t = xi
    for _ in range(k):
        t = profile.theta(t)
        phik = phik * profile.phi(t)
    return xi * phik


# ---------------------------------------------------------------------------
# extremal-sequence verification

def growth_conditions(pairs: Sequence[tuple], alpha, beta, eps, big_c,
                      n: int) -> list[dict]:
    """Per-index verdicts for the two growth conditions on (normSq, L) pairs.

    Condition one compares alpha log Y_{i+1} against beta log Y_i, condition
    two compares log L_i against -beta log Y_i; both allow C plus a slack
    proportional to eps.  With C = 0, eps = 0, and rational alpha, beta the
    checks reduce to exact integer power identities; otherwise certified
    enclosures decide, with an "undecided" verdict when they overlap.
    """
    alpha, beta = _frac(alpha, "alpha"), _frac(beta, "beta")
    eps, big_c = _frac(eps, "eps"), _frac(big_c, "C")
    if min(alpha, beta) <= 0 or eps < 0 or big_c < 0:
        raise DomainError("need alpha, beta > 0 and eps, C >= 0")
    exact_mode = eps == 0 and big_c == 0
    slack1 = 4 * eps * (beta / alpha) ** n
    slack2 = 4 * eps * (beta / alpha) ** 2

    def _verdict(dev, bound) -> str:
        if upper(dev) <= lower(bound):
            return "pass"
        if lower(dev) > upper(bound):
            return "fail"
        return "undecided"

    out = []
    for i in range(len(pairs)):
        row: dict = {"i": i}
        y_sq = Fraction(pairs[i][0])
        l_val = pairs[i][1]
        l_rat = l_val if isinstance(l_val, (int, Fraction)) else None
        if l_rat is None and isinstance(l_val, RigorousReal) and l_val.is_exact:
            l_rat = l_val.lo
        if i + 1 < len(pairs):
            y_next_sq = Fraction(pairs[i + 1][0])
            if exact_mode:
                pa, qa = alpha.numerator, alpha.denominator
                pb, qb = beta.numerator, beta.denominator
                row["growth"] = ("pass" if y_next_sq ** (pa * qb)
                                 == y_sq ** (pb * qa) else "fail")
            else:
                dev = abs(frac_enclosure(alpha) * _half_log_norm_sq(y_next_sq)
                          - frac_enclosure(beta) * _half_log_norm_sq(y_sq))
                bound = (frac_enclosure(big_c)
                         + frac_enclosure(slack1) * _half_log_norm_sq(y_next_sq))
                row["growth"] = _verdict(dev, bound)
        if exact_mode and l_rat is not None:
            pb, qb = beta.numerator, beta.denominator
            row["decay"] = ("pass" if Fraction(l_rat) ** (2 * qb)
                            * y_sq ** pb == 1 else "fail")
        else:
            li = (l_val if isinstance(l_val, iv.mpf)
                  else rig_interval(l_val) if isinstance(l_val, RigorousReal)
                  else frac_enclosure(Fraction(l_val)))
            dev = abs(iv_log(li) + frac_enclosure(beta) * _half_log_norm_sq(y_sq))
            bound = (frac_enclosure(big_c)
                     + frac_enclosure(slack2) * _half_log_norm_sq(y_sq))
            row["decay"] = _verdict(dev, bound)
        out.append(row)
    return out


def verify_extremal_sequence(points: Sequence, target: model.TargetPoint,
                             approx_set: model.ApproxSet, alpha, beta, eps,
                             big_c, seq: Optional[minpoints.MinimalPointSequence] = None,
                             cap: int = minpoints.DEFAULT_ENUM_CAP) -> dict:
    """The four structural conditions on a candidate extremal sequence.

    Growth and decay come from growth_conditions on the measured (norm,
    error) pairs; independence is the exact nonvanishing of each consecutive
    (n+1)-point determinant; envelope agreement asks that no smaller point
    beats each candidate, decided against the enumerated minimal points.
    """
    from .subspaces import _int_det

    n = target.n
    pts = [model.IntegerPoint.canonical(p if not isinstance(p, model.IntegerPoint)
                                        else p.coords) for p in points]
    if len(pts) < n + 1:
        raise TooFewPoints(
            f"need at least n+1 = {n + 1} points, got {len(pts)}"
        )
    alpha, beta = _frac(alpha, "alpha"), _frac(beta, "beta")
    eps, big_c = _frac(eps, "eps"), _frac(big_c, "C")
    threshold = eps_threshold(alpha, beta, n)

    pairs = [(p.norm_sq, model.l_value(target, p, cap)) for p in pts]
    growth = growth_conditions(pairs, alpha, beta, eps, big_c, n)

    dets = []
    for i in range(len(pts) - n):
        d = _int_det([list(pts[i + j].coords) for j in range(n + 1)])
        dets.append({"i": i, "det": d, "pass": d != 0})

    if seq is None:
        x_max = max(p.norm_sq for p in pts)
        seq = minpoints.enumerate_minimal_points(
            target, approx_set, Fraction(math.isqrt(x_max) + 1), cap)
    comparator = minpoints._Comparator(target, cap)
    envelope_rows = []
    for idx, p in enumerate(pts):
        row = {"i": idx, "inSet": bool(approx_set.member(p.coords))}
        best = None
        for e in seq.entries:
            if e.norm_sq <= p.norm_sq:
                best = e
            else:
                break
        if best is None:
            row["pass"] = row["inSet"]  # nothing smaller exists at all
        else:
            cmp_ = comparator.compare(comparator.keys(p.coords),
                                      best.branch_keys, p.coords,
                                      best.point.coords)
            row["pass"] = row["inSet"] and cmp_ <= 0
        envelope_rows.append(row)

    all_pass = (all(r.get("growth", "pass") == "pass"
                    and r.get("decay", "pass") == "pass" for r in growth)
                and all(d["pass"] for d in dets)
                and all(r["pass"] for r in envelope_rows))
    return {
        "n": n,
        "alpha": str(alpha),
        "beta": str(beta),
        "eps": str(eps),
        "C": str(big_c),
        "epsThreshold": str(threshold),
        "thresholdOK": eps <= threshold,
        "growth": growth,
        "determinants": dets,
        "envelopeAgreement": envelope_rows,
        "allPass": all_pass,
    }
