import math
import random

import numpy as np
import pytest

from prochow.errors import ZeroVector
from prochow.lattice import (
    INFINITE,
    cokernel_order,
    det,
    eye,
    invariant_factors,
    kernel_basis,
    mat,
    matrix_rank,
    primitive,
    smith_normal_form,
    smith_transforms,
    solve,
    sublattice_index,
)


def is_diagonal(d):
    m, n = d.shape
    return all(d[i, j] == 0 for i in range(m) for j in range(n) if i != j)


def test_primitive_examples():
    assert primitive((2, 4)) == (1, 2)
    assert primitive((-3, 0)) == (-1, 0)
    with pytest.raises(ZeroVector):
        primitive((0, 0))


def test_primitive_idempotent():
    rng = random.Random(7)
    for _ in range(50):
        v = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 4)))
        if all(c == 0 for c in v):
            continue
        p = primitive(v)
        assert primitive(p) == p
        assert math.gcd(*p) == 1


def test_snf_identity():
    a = eye(2)
    u, d, v = smith_normal_form(a)
    assert (d == eye(2)).all()


def test_snf_hand_example():
    # Hand reduction of [[2,4],[6,8]]: R2 -= 3 R1, C2 -= 2 C1 gives diag(2,-4).
    a = mat([[2, 4], [6, 8]])
    u, d, v = smith_normal_form(a)
    assert (u @ a @ v == d).all()
    assert d[0, 0] == 2 and d[1, 1] == 4
    assert d[0, 1] == 0 and d[1, 0] == 0


def test_snf_zero_matrix():
    a = mat([[0, 0], [0, 0]])
    _, d, _ = smith_normal_form(a)
    assert (d == 0).all()


def test_snf_randomized_properties():
    rng = random.Random(2024)
    for _ in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = mat([[rng.randint(-12, 12) for _ in range(n)] for _ in range(m)])
        u, d, v, ui, vi = smith_transforms(a)
        assert (u @ a @ v == d).all()
        assert abs(det(u)) == 1 and abs(det(v)) == 1
        assert (u @ ui == eye(m)).all()
        assert (v @ vi == eye(n)).all()
        assert is_diagonal(d)
        diag = [d[i, i] for i in range(min(m, n))]
        assert all(x >= 0 for x in diag)
        for x, y in zip(diag, diag[1:]):
            if x != 0:
                assert y % x == 0
            else:
                assert y == 0


def test_cokernel_order_examples():
    assert cokernel_order(mat([[2]])) == 2
    assert cokernel_order(eye(2)) == 1
    # Z -> Z^2, t -> (t, t): cokernel is Z.
    assert cokernel_order(mat([[1], [1]])) is INFINITE


def test_cokernel_order_unimodular_invariance():
    rng = random.Random(5)
    a = mat([[2, 0], [0, 3]])
    base = cokernel_order(a)
    for _ in range(20):
        # random unimodular row/column operations
        b = np.array(a, copy=True)
        for _ in range(4):
            i, j = rng.sample(range(2), 2)
            c = rng.randint(-3, 3)
            if rng.random() < 0.5:
                b[i] += c * b[j]
            else:
                b[:, i] += c * b[:, j]
        assert cokernel_order(b) == base


def test_sublattice_index_examples():
    assert sublattice_index([(1, 0), (0, 2)], 2) == 2
    assert sublattice_index([(1, 0), (1, 2)], 2) == 2
    assert sublattice_index([(1, 1)], 2) is INFINITE


def test_solve_and_kernel():
    a = mat([[2, 4], [6, 8]])
    x = solve(a, (2, 6))
    assert x is not None
    assert (a @ np.array(x, dtype=object) == np.array([2, 6], dtype=object)).all()
    assert solve(a, (1, 0)) is None
    k = kernel_basis(mat([[1, 1, 1]]))
    assert len(k) == 2
    for v in k:
        assert sum(v) == 0
    assert matrix_rank(mat([[1, 2], [2, 4]])) == 1


def test_invariant_factors_example():
    assert invariant_factors(mat([[2, 4], [6, 8]])) == (2, 4)
    assert invariant_factors(mat([], width=3)) == ()
