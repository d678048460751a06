"""Jump indices, the nested subspace families, and their exact identities."""

import random
from fractions import Fraction

import pytest

from simra.construction import (
    build_subspace_family,
    family_report,
    lemma32_check,
    select_indices,
    theorem31_ratio,
    verify_family_identities,
)
from simra.errors import DomainError, InsufficientData, LevelOutOfRange
from simra.subspaces import saturate

SYNTH = [(1, 0, 0), (2, 1, 0), (3, 2, 0), (1, 1, 1)]


def test_select_indices_synthetic():
    assert select_indices(SYNTH, 0) == [0, 2]
    chain = [(1, 0, 0), (1, 1, 0), (1, 1, 1)]
    assert select_indices(chain, 0) == [0, 1]


def test_select_indices_requires_certifying_jump():
    flat = [(1, 0, 0), (2, 1, 0), (3, 2, 0)]  # never leaves the plane
    with pytest.raises(InsufficientData):
        select_indices(flat, 0)
    with pytest.raises(InsufficientData):
        select_indices([], 0)


def test_select_indices_rejects_degenerate_start():
    pts = [(1, 0, 0), (2, 0, 0), (1, 1, 0), (1, 1, 1)]
    with pytest.raises(DomainError):
        select_indices(pts, 0)  # x_1 proportional to x_0
    with pytest.raises(DomainError):
        select_indices(SYNTH, 99)


def test_build_family_synthetic():
    fam = build_subspace_family(SYNTH, [0, 2])
    assert fam.n == 2 and fam.i0 == 0
    # base cases: U_t^1 = <x_{i_t}>, V_t^2 = <x_{i_t}, x_{i_t+1}>
    assert fam.u[(0, 1)] == saturate([SYNTH[0]], 3)
    assert fam.u[(1, 1)] == saturate([SYNTH[2]], 3)
    assert fam.v[(1, 1)] == saturate([SYNTH[2], SYNTH[3]], 3)
    for (t, k), w in fam.u.items():
        assert w.dim == k
    for (t, k), w in fam.v.items():
        assert w.dim == k + 1


def test_family_needs_successor_entry():
    with pytest.raises(InsufficientData):
        build_subspace_family(SYNTH, [0, 3])  # entry 4 does not exist


def test_verify_family_identities_synthetic():
    fam = build_subspace_family(SYNTH, [0, 2])
    rep = verify_family_identities(fam)
    assert rep["allPass"], [c for c in rep["checks"] if not c["pass"]]
    # s-table monotone rows
    for t in range(fam.n):
        row = [fam.s[(t, k)] for k in range(1, t + 2)]
        assert row[0] == fam.indices[t]
        assert all(a > b for a, b in zip(row, row[1:]))
        assert row[-1] >= fam.i0


def random_spanning_sequence(rng, ambient, length):
    while True:
        pts = []
        for _ in range(length):
            v = tuple(rng.randint(-5, 5) for _ in range(ambient))
            if any(v):
                pts.append(v)
        if len(pts) < length:
            continue
        if saturate(pts, ambient).dim == ambient:
            return pts


def test_identities_on_random_families():
    rng = random.Random(123)
    built = 0
    for _ in range(40):
        ambient = rng.randint(3, 5)
        pts = random_spanning_sequence(rng, ambient, rng.randint(ambient + 2, 12))
        try:
            idx = select_indices(pts, 0)
            fam = build_subspace_family(pts, idx)
        except (InsufficientData, DomainError):
            continue
        built += 1
        rep = verify_family_identities(fam)
        assert rep["allPass"], [c for c in rep["checks"] if not c["pass"]]
    assert built >= 20  # the fuzz must actually exercise the identities


def test_lemma32_level_bounds():
    fam = build_subspace_family(SYNTH, [0, 2])
    out = lemma32_check(fam, 1)
    assert out["lhsSq"] >= 1 and out["rhsSq"] >= 1
    assert out["ratioSq"] == Fraction(out["lhsSq"], out["rhsSq"])
    with pytest.raises(LevelOutOfRange):
        lemma32_check(fam, 0)
    with pytest.raises(LevelOutOfRange):
        lemma32_check(fam, 2)


def test_cubic_indices_and_identities(cubic_seq_1e4):
    idx = select_indices(cubic_seq_1e4, 0)
    assert len(idx) == 2 and idx[0] == 0
    fam = build_subspace_family(cubic_seq_1e4, idx)
    assert verify_family_identities(fam)["allPass"]
    # independent rank oracle for the jump definition
    pts = cubic_seq_1e4.points()
    i1 = idx[1]
    assert saturate(pts[: i1 + 1], 3).dim == 2
    assert saturate(pts[: i1 + 2], 3).dim == 3


def test_theorem31_ratio_formula(cubic_seq_1e4):
    out = theorem31_ratio(cubic_seq_1e4, 0)
    assert out["indices"] == select_indices(cubic_seq_1e4, 0)
    i1 = out["indices"][1]
    assert out["lhsSq"] == cubic_seq_1e4.entries[i1].norm_sq
    # n=2 instantiation: ratio = X_{i1} / (L_{i0} X_{i0+1} L_{i1} X_{i1+1})
    e = cubic_seq_1e4.entries
    manual = (float(e[i1].x_value)
              / (float(e[0].l_value) * float(e[1].x_value)
                 * float(e[i1].l_value) * float(e[i1 + 1].x_value)))
    assert float(out["ratio"]) == pytest.approx(manual, rel=1e-9)


def test_theorem31_ratio_out_of_data(cubic_seq_1e4):
    with pytest.raises(InsufficientData):
        theorem31_ratio(cubic_seq_1e4, len(cubic_seq_1e4) - 2)


def test_family_report_shape(cubic_seq_1e4):
    idx = select_indices(cubic_seq_1e4, 0)
    fam = build_subspace_family(cubic_seq_1e4, idx)
    rep = family_report(fam, cubic_seq_1e4)
    assert rep["n"] == 2 and rep["i0"] == 0
    assert rep["identities"]["allPass"]
    assert "1" in rep["levelHeightRatios"]
    assert "indexProductRatio" in rep
    assert set(rep["sTable"]) == {"0,1", "1,1", "1,2"}
