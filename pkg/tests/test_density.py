"""Monomial evaluation, exact rank, vanishing spaces, density verdicts."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from sl2factor import (
    Mat2,
    PointTuple,
    density_report,
    density_witness,
    generic_unit_variety_baseline,
    generic_variety_baseline,
    make_ring,
    monomial_exponents,
    monomial_matrix,
    orbit_points,
    vanishing_basis,
    vanishing_space_dim,
)
from sl2factor.density import _rank_bareiss


def els(ring, *vals):
    return tuple(ring.el(v) for v in vals)


# -- monomial order ---------------------------------------------------------


def test_monomial_exponents_k2_d2():
    assert monomial_exponents(2, 2) == [
        (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)
    ]


def test_monomial_exponents_count():
    for k in (1, 2, 3, 5):
        for D in (0, 1, 2, 3):
            exps = monomial_exponents(k, D)
            assert len(exps) == comb(k + D, D)
            assert len(set(exps)) == len(exps)
            assert all(len(e) == k and sum(e) <= D for e in exps)


def test_monomial_exponents_gates():
    with pytest.raises(ValueError):
        monomial_exponents(0, 2)
    with pytest.raises(ValueError):
        monomial_exponents(2, -1)


def test_monomial_matrix_row(Z):
    rows, exps = monomial_matrix([els(Z, 2, 3)], 2)
    assert exps == monomial_exponents(2, 2)
    assert [x.a for x in rows[0]] == [1, 2, 3, 4, 6, 9]


def test_monomial_matrix_gates(Z):
    with pytest.raises(ValueError):
        monomial_matrix([], 2)
    with pytest.raises(ValueError):
        monomial_matrix([els(Z, 1, 2), els(Z, 1)], 1)


# -- exact rank ---------------------------------------------------------------


def gauss_rank(rows: list[list[Fraction]]) -> int:
    M = [r[:] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        lead = M[rank][c]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c] / lead
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def test_bareiss_matches_gauss(rng, Z):
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[Z.el(rng.randint(-6, 6)) for _ in range(ncols)]
                for _ in range(nrows)]
        # plant a dependent row now and then
        if nrows >= 2 and rng.random() < 0.5:
            rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % nrows])]
        got = _rank_bareiss([r[:] for r in rows], ncols)
        want = gauss_rank([[Fraction(x.a) for x in r] for r in rows])
        assert got == want


# -- vanishing spaces ---------------------------------------------------------


def test_single_point_line(Z):
    assert vanishing_space_dim([els(Z, 5)], 1) == 1


def test_collinear_points(Z):
    pts = [els(Z, t, t) for t in (0, 1, 2)]
    assert vanishing_space_dim(pts, 1) == 1
    assert density_witness(pts, 1, baseline=1)
    assert not density_witness(pts, 1, baseline=0)


def test_parabola_relation(Z):
    pts = [els(Z, i, i * i) for i in range(6)]
    assert vanishing_space_dim(pts, 2) == 1
    basis, exps = vanishing_basis(pts, 2)
    assert exps == monomial_exponents(2, 2)
    assert [[x.a for x in vec] for vec in basis] == [[0, 0, -1, 1, 0, 0]]


def test_unit_curve_relation(Z_half):
    pts = [(Z_half.el(2) ** n, Z_half.el(1, 0, 2) ** n) for n in range(6)]
    assert vanishing_space_dim(pts, 2) == 1
    basis, _ = vanishing_basis(pts, 2)
    assert len(basis) == 1
    assert [str(x) for x in basis[0]] == ["-1", "0", "0", "0", "1", "0"]


def test_nullity_monotone_and_stable(rng, Z):
    pts = [els(Z, rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(5)]
    base = vanishing_space_dim(pts, 2)
    assert vanishing_space_dim(pts + [pts[0]], 2) == base  # duplicate no-op
    more = pts + [els(Z, 9, -7)]
    assert vanishing_space_dim(more, 2) <= base
    shuffled = pts[:]
    rng.shuffle(shuffled)
    assert vanishing_space_dim(shuffled, 2) == base


def test_quadratic_ring_points(Zr2):
    # three points on the line x2 = sqrt(2) * x1
    w = Zr2.el(0, 1)
    pts = [(Zr2.el(t), Zr2.el(t) * w) for t in (1, 2, 3)]
    assert vanishing_space_dim(pts, 1) == 1
    basis, _ = vanishing_basis(pts, 1)
    vec = basis[0]
    # the relation is x2 - sqrt(2) x1 up to scale
    assert vec[0] == 0 and vec[2] != 0
    assert vec[1] == -vec[2] * Zr2.el(0, 1)


def test_vanishing_gates(Z):
    with pytest.raises(ValueError):
        vanishing_space_dim([els(Z, 1, 2)], 0)
    with pytest.raises(ValueError):
        vanishing_space_dim([], 2)


def test_basis_vectors_annihilate(rng, Z):
    pts = [els(Z, rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))
           for _ in range(4)]
    basis, exps = vanishing_basis(pts, 2)
    rows, _ = monomial_matrix(pts, 2)
    for vec in basis:
        for row in rows:
            acc = Z.zero
            for coef, val in zip(vec, row):
                acc = acc + coef * val
            assert acc == 0


# -- reports and baselines ----------------------------------------------------


def test_density_report_shape(Z):
    pts = [els(Z, i, i * i) for i in range(6)]
    rep = density_report(pts, 2, baseline=1)
    assert rep == {
        "k": 2, "D": 2, "monomials": 6, "points": 6,
        "nullity": 1, "baseline": 1, "dense_at_D": True,
    }
    rep = density_report(pts, 2)
    assert rep["baseline"] == 0 and rep["dense_at_D"] is False


def test_generic_baselines_deterministic(Z_half):
    A = Mat2(Z_half.el(2), Z_half.el(3), Z_half.el(3), Z_half.el(5))
    b1 = generic_variety_baseline(A, 4, 2, 20, 99)
    b2 = generic_variety_baseline(A, 4, 2, 20, 99)
    assert b1 == b2
    u1 = generic_unit_variety_baseline(Z_half, 2, 2, 8, 5)
    assert u1 == generic_unit_variety_baseline(Z_half, 2, 2, 8, 5)
    assert u1 == 1  # the curve x1*x2 = 1 carries exactly one quadric


def test_orbit_points_match_generic_baseline(Z_half):
    # integral points produced by the window actions should impose the
    # same degree-2 conditions as generic field points of the variety
    A = Mat2(Z_half.el(2), Z_half.el(3), Z_half.el(3), Z_half.el(5))
    seed = PointTuple("lower", els(Z_half, 1, 1, 1, 1))
    pts = orbit_points(A, seed, 40)
    baseline = generic_variety_baseline(A, 4, 2, 20, 1234)
    assert vanishing_space_dim(pts, 2) == baseline
