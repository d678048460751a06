"""Minimal-point enumeration, envelope queries, and the independent oracles."""

import io
import math
from fractions import Fraction

import pytest

from simra import minpoints, model, presets, rigorous
from simra.errors import (
    BeyondCertifiedRange,
    DependentCoordinates,
    DomainError,
    EmptySet,
)
from simra.minpoints import (
    INFINITE,
    brute_force_reference,
    dirichlet_check,
    enumerate_minimal_points,
    envelope,
    envelope_at_norm_sq,
    exhaustive_scan,
    verify_annulus,
    verify_minimality,
    verify_properties,
    write_csv,
)
from simra.model import IntegerPoint
from simra.rigorous import rational, sqrt

SQRT2_POINTS_30 = [(0, 1), (1, 1), (2, 3), (5, 7), (12, 17)]


def test_sqrt2_sequence_to_30(sqrt2_seq_30):
    assert sqrt2_seq_30.points() == SQRT2_POINTS_30
    # the L values: 1, sqrt2-1, 3-2sqrt2, 5sqrt2-7, 17-12sqrt2
    expected = [1.0, 0.41421356, 0.17157288, 0.07106781, 0.02943725]
    for e, want in zip(sqrt2_seq_30.entries, expected):
        got = rigorous.refine(e.l_value, 60)
        assert float(got) == pytest.approx(want, abs=1e-8)


def test_even_x0_congruence_sequence():
    doc = dict(presets.preset_config("sqrt2"))
    doc["S"] = {"type": "congruence", "modulus": 2, "residues": {"0": [0]}}
    target, approx = model.load_target(doc)
    seq = enumerate_minimal_points(target, approx, 30)
    # odd-x_0 points are excluded; (2,2) sneaks in between the records
    assert seq.points() == [(0, 1), (2, 2), (2, 3), (10, 14), (12, 17)]
    assert all(p[0] % 2 == 0 for p in seq.points())
    ref = brute_force_reference(target, approx, 30)
    assert ref.points() == seq.points()


def test_rational_target_detected_as_dependent():
    target, approx = model.load_target(
        {"n": 1, "coords": [{"type": "rational", "value": "1"},
                            {"type": "rational", "value": "3/2"}]})
    with pytest.raises(DependentCoordinates):
        enumerate_minimal_points(target, approx, 30)


def test_x_max_validation(sqrt2):
    target, approx = sqrt2
    with pytest.raises(DomainError):
        enumerate_minimal_points(target, approx, Fraction(1, 2))


def test_empty_set():
    target, _ = presets.load_preset("sqrt2")
    approx = model.Sublattice([(40, 0), (0, 40)])
    with pytest.raises(EmptySet):
        enumerate_minimal_points(target, approx, 30)


def test_sublattice_enumeration():
    target, _ = presets.load_preset("sqrt2")
    approx = model.Sublattice([(2, 0), (0, 1)])  # x_0 even, as a lattice
    seq = enumerate_minimal_points(target, approx, 30)
    assert seq.points() == [(0, 1), (2, 2), (2, 3), (10, 14), (12, 17)]


def test_sqrt2_sequence_to_1e5(sqrt2_seq_1e5):
    assert len(sqrt2_seq_1e5) == 14
    assert sqrt2_seq_1e5.points()[-1] == (33461, 47321)
    verify_properties(sqrt2_seq_1e5)


def test_envelope_values(sqrt2_seq_30, sqrt2):
    target, _ = sqrt2
    # X = 10 -> record of (5,7): 5*sqrt2 - 7
    v = envelope(sqrt2_seq_30, 10)
    want = rigorous.refine(sqrt(2) * 5 - 7, 60)
    diff = rigorous.refine(v - want, 60)
    assert abs(diff.midpoint) <= diff.radius
    # below the first point: min over the empty set
    assert envelope(sqrt2_seq_30, Fraction(1, 2)) is INFINITE
    # boundary inclusion: min over norm <= X at exactly X = ||(2,3)||
    b = envelope_at_norm_sq(sqrt2_seq_30, 13)
    d2 = rigorous.refine(b - (3 - sqrt(2) * 2), 60)
    assert abs(d2.midpoint) <= d2.radius
    with pytest.raises(BeyondCertifiedRange):
        envelope(sqrt2_seq_30, 31)


def test_envelope_step_structure(sqrt2_seq_30):
    # constant on [X_i, X_{i+1}): query strictly inside the step
    inside = envelope_at_norm_sq(sqrt2_seq_30, 13 + 1)
    at = envelope_at_norm_sq(sqrt2_seq_30, 13)
    assert inside is at  # same entry object: same record


def test_dirichlet_check(sqrt2_seq_1e5):
    rep = dirichlet_check(sqrt2_seq_1e5)
    assert rep.n == 1
    # X_{i+1} L_i with X the full vector norm (not the bare denominator):
    # limit sqrt(3) (1+sqrt(2)) / (2 sqrt(2)) ~ 1.4784
    assert rep.sup_upper < 1.5
    assert rep.values[-1] == pytest.approx(1.4783978, abs=1e-6)
    assert rep.at_index is not None
    assert len(rep.values) == len(sqrt2_seq_1e5) - 1


def test_oracle_agreement_small(sqrt2):
    target, approx = sqrt2
    fast = enumerate_minimal_points(target, approx, 200)
    brute = brute_force_reference(target, approx, 200)
    windowed = exhaustive_scan(target, approx, 200)
    assert fast.points() == brute.points() == windowed.points()


def test_annulus_and_minimality(sqrt2_seq_30):
    assert verify_annulus(sqrt2_seq_30) == 4
    assert verify_minimality(sqrt2_seq_30) > 0


def test_threads_deterministic(sqrt2):
    target, approx = sqrt2
    one = enumerate_minimal_points(target, approx, 5000, threads=1)
    four = enumerate_minimal_points(target, approx, 5000, threads=4)
    assert one.points() == four.points()


def test_csv_export(sqrt2_seq_30):
    buf = io.StringIO()
    write_csv(sqrt2_seq_30, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "i,x_0,x_1,normSq,X,L,log10X,neg_log10L"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert first[:4] == ["0", "0", "1", "1"]
    # deterministic: a second export is byte-identical
    buf2 = io.StringIO()
    write_csv(sqrt2_seq_30, buf2)
    assert buf.getvalue() == buf2.getvalue()


def test_cubic_sequence_head(cubic_seq_1e4):
    pts = cubic_seq_1e4.points()
    assert pts[0] == (0, 0, 1)
    assert pts[1:4] == [(1, 1, 1), (1, 1, 2), (3, 4, 5)]
    assert len(pts) == 11
    verify_properties(cubic_seq_1e4)
    # spanning: the tail reaches full rank (needed by the index construction)
    tail = pts[-4:]
    from simra.subspaces import saturate
    assert saturate(tail, 3).dim == 3


def test_cubic_small_oracle(cubic):
    target, approx = cubic
    fast = enumerate_minimal_points(target, approx, 60)
    brute = brute_force_reference(target, approx, 60)
    assert fast.points() == brute.points()
    assert verify_annulus(fast, max_norm_sq=60 * 60) == len(fast) - 1


def test_decimal_targets_work_at_data_precision():
    # a 60-digit decimal has plenty of slack for X <= 2000
    target, approx = presets.load_preset("liouville-sqrt2")
    seq = enumerate_minimal_points(target, approx, 100)
    assert len(seq) >= 4
    verify_properties(seq)
