"""Exact linear algebra: determinants, kernels, intersections, Schur residuals."""

import random

import pytest

from sumrank import linalg
from sumrank.errors import (
    AmbientMismatchError,
    NotSquareError,
    SingularLeadingBlockError,
)
from sumrank.fields import MID
from sumrank.linalg import Mat, Subspace


def mid_mat(tower, rows):
    return Mat.from_rows(
        [[tower.mid(v) for v in row] for row in rows],
        tower=tower,
        level=MID,
        cols=len(rows[0]),
    )


def rand_mid_mat(tower, rng, rows, cols):
    return Mat.from_rows(
        [
            [tower.mid([rng.randrange(tower.p) for _ in range(tower.m)]) for _ in range(cols)]
            for _ in range(rows)
        ],
        tower=tower,
        level=MID,
        cols=cols,
    )


# ---------------------------------------------------------------- determinant


def test_det_gram_example(f25):
    m = mid_mat(f25, [[4, 1], [1, 3]])
    assert linalg.det(m) == f25.mid(1)  # 12 - 1 = 11 = 1 mod 5


def test_det_identity_and_empty(f25):
    assert linalg.det(Mat.identity(f25, MID, 3)) == f25.mid_one()
    empty = Mat.from_rows([], tower=f25, level=MID, cols=0)
    assert linalg.det(empty) == f25.mid_one()


def test_det_repeated_row(f25):
    m = mid_mat(f25, [[1, 2], [1, 2]])
    assert not linalg.det(m)


def test_det_multiplicative(f25, f2401):
    rng = random.Random(21)
    for tower in (f25, f2401):
        for n in (2, 3, 4, 6):
            a = rand_mid_mat(tower, rng, n, n)
            b = rand_mid_mat(tower, rng, n, n)
            assert linalg.det(a @ b) == linalg.det(a) * linalg.det(b)


def test_det_requires_square(f25):
    with pytest.raises(NotSquareError):
        linalg.det(mid_mat(f25, [[1, 2, 3], [4, 0, 1]]))


# ---------------------------------------------------------------- rank / kernel


def test_rank_kernel_zero_matrix(f25):
    m = Mat.zeros(f25, MID, 2, 2)
    rank, ker = linalg.rank_kernel(m)
    assert rank == 0 and ker.dim == 2


def test_rank_kernel_invertible(f25):
    rank, ker = linalg.rank_kernel(mid_mat(f25, [[4, 1], [1, 3]]))
    assert rank == 2 and ker.dim == 0


def test_rank_nullity_random(f169):
    rng = random.Random(22)
    for _ in range(20):
        m = rand_mid_mat(f169, rng, 3, 5)
        rank, ker = linalg.rank_kernel(m)
        assert rank + ker.dim == 5
        for krow in ker.basis.entries:
            for mrow in m.entries:
                acc = f169.mid_zero()
                for a, b in zip(mrow, krow):
                    acc = acc + a * b
                assert not acc


# ---------------------------------------------------------------- intersection


def test_intersect_self(f25):
    basis = mid_mat(f25, [[1, 0, 0, 0], [0, 1, 0, 0]])
    s = Subspace.from_generators(basis.entries, f25, MID, 4)
    assert linalg.intersect(s, s).basis == s.basis


def test_intersect_complementary(f25):
    a = Subspace.from_generators(
        mid_mat(f25, [[1, 0, 0, 0], [0, 1, 0, 0]]).entries, f25, MID, 4
    )
    b = Subspace.from_generators(
        mid_mat(f25, [[0, 0, 1, 0], [0, 0, 0, 1]]).entries, f25, MID, 4
    )
    assert linalg.intersect(a, b).dim == 0


def test_intersection_dimension_formula(f169):
    rng = random.Random(23)
    for _ in range(20):
        a = Subspace.from_generators(
            rand_mid_mat(f169, rng, rng.randint(1, 4), 6).entries, f169, MID, 6
        )
        b = Subspace.from_generators(
            rand_mid_mat(f169, rng, rng.randint(1, 4), 6).entries, f169, MID, 6
        )
        inter = linalg.intersect(a, b)
        total = linalg.subspace_sum(a, b)
        assert a.dim + b.dim == inter.dim + total.dim
        for row in inter.basis.entries:
            assert a.contains(row) and b.contains(row)


def test_intersect_ambient_mismatch(f25):
    a = Subspace.from_generators([], f25, MID, 3)
    b = Subspace.from_generators([], f25, MID, 4)
    with pytest.raises(AmbientMismatchError):
        linalg.intersect(a, b)


# ---------------------------------------------------------------- Schur residual


def test_schur_diag(f25):
    for c in range(5):
        h = mid_mat(f25, [[1, 0], [0, c]])
        assert linalg.schur_residual(h) == f25.mid(c)


def test_schur_degenerate_one_by_one(f25):
    for c in range(5):
        assert linalg.schur_residual(mid_mat(f25, [[c]])) == f25.mid(c)


def test_schur_times_det_leading_equals_det(f169):
    rng = random.Random(24)
    done = 0
    while done < 20:
        h = rand_mid_mat(f169, rng, 3, 3)
        lead = Mat.from_rows(
            [row[:2] for row in h.entries[:2]], tower=f169, level=MID, cols=2
        )
        if not linalg.det(lead):
            continue
        assert linalg.schur_residual(h) * linalg.det(lead) == linalg.det(h)
        done += 1


def test_schur_singular_leading_block(f25):
    h = mid_mat(f25, [[0, 0, 1], [0, 0, 2], [1, 2, 3]])
    with pytest.raises(SingularLeadingBlockError):
        linalg.schur_residual(h)
