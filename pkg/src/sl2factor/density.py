"""Degree-bounded density certificates by exact linear algebra.

A point set is declared dense at degree D when no polynomial of degree
at most D vanishes on it beyond the ones forced by the ambient variety:
the nullity of the monomial evaluation matrix must match a baseline
computed from generic field-valued samples.  Everything is exact; the
elimination is fraction-free to keep coefficient growth polynomial.
"""

from __future__ import annotations

import random
from math import comb, gcd
from typing import Sequence

from .rings import RElem, Ring
from .varieties import PointTuple, fiber_lift, unit_product_points

BASELINE_TAIL_SPAN = 40


def monomial_exponents(k: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of all k-variable monomials of total degree at
    most `degree`: ascending in degree, lexicographically descending
    within a degree.  Length C(k + degree, degree)."""
    if k < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be nonnegative")

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for head in range(total, -1, -1):
            for rest in compositions(total - head, parts - 1):
                yield (head,) + rest

    out = []
    for d in range(degree + 1):
        out.extend(compositions(d, k))
    assert len(out) == comb(k + degree, degree)
    return out


def _point_entries(P) -> tuple[RElem, ...]:
    if isinstance(P, PointTuple):
        return P.entries
    return tuple(P)


def monomial_matrix(points: Sequence, degree: int) -> tuple[list[list[RElem]], list[tuple[int, ...]]]:
    """Evaluation matrix (one row per point, one column per monomial)
    together with the exponent order defining the columns."""
    if not points:
        raise ValueError("need at least one point")
    rows_in = [_point_entries(P) for P in points]
    k = len(rows_in[0])
    if any(len(e) != k for e in rows_in):
        raise ValueError("points of mixed lengths")
    exps = monomial_exponents(k, degree)
    rows = []
    for entries in rows_in:
        one = entries[0].ring.one
        pows = [[one] for _ in range(k)]
        for i, x in enumerate(entries):
            for _ in range(degree):
                pows[i].append(pows[i][-1] * x)
        row = []
        for e in exps:
            val = one
            for i, ei in enumerate(e):
                if ei:
                    val = val * pows[i][ei]
            row.append(val)
        rows.append(row)
    return rows, exps


def _cleared(row: Sequence[RElem]) -> list[RElem]:
    """Row rescaled by a positive integer so every entry has trivial
    denominator; rescaling never changes the row space."""
    scale = 1
    for x in row:
        scale = scale * x.r // gcd(scale, x.r)
    if scale == 1:
        return list(row)
    return [x * scale for x in row]


def _rank_bareiss(rows: list[list[RElem]], ncols: int) -> int:
    """Rank by fraction-free elimination; divisions are exact field
    divisions, so column skipping on singular input stays correct."""
    if not rows:
        return 0
    M = [row[:] for row in rows]
    nrows = len(M)
    ring = M[0][0].ring
    prev = ring.one
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if M[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
        lead = M[rank][c]
        for i in range(rank + 1, nrows):
            fac = M[i][c]
            if fac:
                Mi, Mr = M[i], M[rank]
                for j in range(c + 1, ncols):
                    Mi[j] = (lead * Mi[j] - fac * Mr[j]) / prev
                Mi[c] = ring.zero
            else:
                Mi = M[i]
                for j in range(c + 1, ncols):
                    Mi[j] = (lead * Mi[j]) / prev
        prev = lead
        rank += 1
        if rank == ncols:
            break
    return rank


def evaluation_rank(rows: list[list[RElem]], ncols: int) -> int:
    """Rank of the cleared evaluation matrix, trying a prefix of the
    rows first and doubling until the column rank is saturated or all
    rows are used."""
    cleared = [_cleared(r) for r in rows]
    take = min(len(cleared), ncols + 10)
    while True:
        r = _rank_bareiss(cleared[:take], ncols)
        if r == ncols or take >= len(cleared):
            return r
        take = min(len(cleared), take * 2)


def vanishing_space_dim(points: Sequence, degree: int) -> int:
    """Dimension of the space of polynomials of degree <= `degree`
    vanishing at every given point (nullity of the evaluation matrix)."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    rows, exps = monomial_matrix(points, degree)
    return len(exps) - evaluation_rank(rows, len(exps))


def vanishing_basis(points: Sequence, degree: int) -> tuple[list[list[RElem]], list[tuple[int, ...]]]:
    """Basis of the vanishing space as coefficient vectors over the
    monomial order, via exact reduced row echelon form."""
    rows, exps = monomial_matrix(points, degree)
    n = len(exps)
    ring = rows[0][0].ring
    M = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                fac = M[i][c]
                M[i] = [a - fac * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    basis = []
    pivot_set = set(pivots)
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [ring.zero] * n
        vec[free] = ring.one
        for row_idx, c in enumerate(pivots):
            vec[c] = -M[row_idx][free]
        basis.append(vec)
    return basis, exps


def density_witness(points: Sequence, degree: int, baseline: int = 0) -> bool:
    """True when the points impose as many conditions in degree <=
    `degree` as generic points of the ambient variety do."""
    return vanishing_space_dim(points, degree) == baseline


def density_report(points: Sequence, degree: int, *, baseline: int = 0) -> dict:
    """Full density verdict as a plain dict ready for JSON output."""
    nullity = vanishing_space_dim(points, degree)
    k = len(_point_entries(points[0]))
    return {
        "k": k,
        "D": degree,
        "monomials": comb(k + degree, degree),
        "points": len(points),
        "nullity": nullity,
        "baseline": baseline,
        "dense_at_D": nullity == baseline,
    }


def generic_variety_baseline(A, k: int, degree: int, count: int, seed: int) -> int:
    """Baseline nullity from pseudorandom field-valued points of the
    length-k factorization variety, sampled by lifting random integer
    tails through the length-3 fibration."""
    rng = random.Random(seed)
    ring = A.ring
    pts = []
    attempts = 0
    while len(pts) < count:
        attempts += 1
        if attempts > 20 * count:
            raise RuntimeError("generic sampling kept hitting empty fibers")
        tail = tuple(ring.el(rng.randint(-BASELINE_TAIL_SPAN, BASELINE_TAIL_SPAN))
                     for _ in range(k - 3))
        P = fiber_lift(A, tail)
        if P is not None:
            pts.append(P)
    return vanishing_space_dim(pts, degree)


def generic_unit_variety_baseline(ring: Ring, k: int, degree: int, count: int,
                                  seed: int) -> int:
    """Baseline nullity for the unit-product variety x1*...*xk = 1 from
    pseudorandom unit tuples."""
    rng = random.Random(seed)
    gens = ring.unit_generators()
    pts = []
    for _ in range(count):
        us = []
        for _ in range(k - 1):
            u = ring.one
            for g in gens:
                if g == -1:
                    if rng.randint(0, 1):
                        u = -u
                else:
                    u = u * g ** rng.randint(-5, 5)
            us.append(u)
        pts.append(unit_product_points(ring, k, us))
    return vanishing_space_dim(pts, degree)
