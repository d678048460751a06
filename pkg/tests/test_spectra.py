"""The exponent spectrum: corner roots, the frontier curve, preset reports."""

import io
import math
from fractions import Fraction

import pytest

from simra import rigorous, spectra
from simra.errors import DomainError, SchemaError
from simra.minpoints import INFINITE
from simra.spectra import (
    frontier,
    frontier_rows,
    lambda_n,
    lambda_rows,
    liouville_preset,
    write_frontier_csv,
    write_lambda_csv,
)
from simra.transference import mm_lhs


def test_lambda_2_is_golden():
    root = lambda_n(2)
    golden = (rigorous.sqrt(5) - 1) / 2
    diff = rigorous.refine(root - golden, 80)
    assert abs(float(diff)) < 1e-12
    assert abs(diff.midpoint) <= diff.radius  # same real number


def test_lambda_3_value():
    assert float(lambda_n(3)) == pytest.approx(0.4052678569, abs=1e-9)


def test_lambda_n_defining_identity():
    for n in range(2, 9):
        root = lambda_n(n)
        v = mm_lhs(root, Fraction(1, n - 1), n)
        assert abs(float(v) - 1) < 1e-10


def test_lambda_n_decreasing():
    vals = [float(r) for _, r in lambda_rows(2, 10)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert 0 < vals[-1] < vals[0] < 1


def test_lambda_n_domain():
    with pytest.raises(DomainError):
        lambda_n(1)
    with pytest.raises(DomainError):
        lambda_n(3, tol=0)


def test_frontier_endpoints():
    assert frontier(1, 3) is INFINITE
    assert frontier(Fraction(1, 3), 3) == Fraction(1, 3)
    with pytest.raises(DomainError):
        frontier(Fraction(1, 4), 3)  # below the Dirichlet corner
    with pytest.raises(DomainError):
        frontier(Fraction(11, 10), 3)
    with pytest.raises(DomainError):
        frontier(Fraction(1, 2), 1)


def test_frontier_n2_closed_form():
    assert frontier(Fraction(3, 5), 2) == Fraction(9, 10)
    assert frontier(Fraction(1, 2), 2) == Fraction(1, 2)
    g = lambda_n(2)
    # the corner root maps to lambda = 1 on the n = 2 frontier
    lam = frontier(Fraction(float(g)).limit_denominator(10 ** 12), 2)
    assert float(lam) == pytest.approx(1.0, abs=1e-10)


def test_frontier_n3_value():
    lam = frontier(Fraction(1, 2), 3)
    assert float(lam) == pytest.approx((1 + 5 ** 0.5) / 4, abs=1e-12)


def test_frontier_rows_satisfy_identity():
    for n in (2, 3, 4, 5):
        for lh, lam in frontier_rows(n, grid_count=17):
            if isinstance(lam, float) and math.isinf(lam):
                assert lh == 1
                continue
            assert float(mm_lhs(lh, lam, n)) == pytest.approx(1.0, abs=1e-10)
            assert lam >= lh


def test_lambda_csv():
    buf = io.StringIO()
    write_lambda_csv(buf, 2, 5)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,lambda_n"
    assert len(lines) == 5
    assert lines[1].startswith("2,0.618033988749")


def test_frontier_csv():
    buf = io.StringIO()
    write_frontier_csv(buf, 3, grid_count=11)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "lambda_hat,lambda"
    assert len(lines) == 12
    assert lines[-1].endswith(",inf")


def test_liouville_preset_quadratic():
    theta = {"type": "algebraic", "minpoly": [-2, 0, 1], "interval": ["1", "2"]}
    extra = {"type": "decimal",
             "value": "1.73205080756887729352744634150587236694280525381038"
                      "062805581"}
    rep = liouville_preset(theta, extra, 10 ** 4)
    assert rep["n"] == 2 and rep["thetaDegree"] == 2
    assert rep["entries"] == 11
    assert rep["scaledInfAt"] == 0
    assert rep["scaledInf"] == pytest.approx(1.0, abs=1e-12)
    assert rep["lambdaHatEst"] == pytest.approx(0.348, abs=0.01)
    assert rep["lambdaN"] == pytest.approx(0.6180339887, abs=1e-9)
    assert rep["marginBelowCorner"] > 0.25


def test_liouville_preset_validation():
    with pytest.raises(SchemaError):
        liouville_preset({"type": "rational", "value": "2"}, None, 100)
    with pytest.raises(DomainError):
        liouville_preset({"type": "algebraic", "minpoly": [-2, 1],
                          "interval": ["1", "3"]}, None, 100)
