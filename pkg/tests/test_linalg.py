import pickle

import numpy as np
import pytest

from kronq.linalg import (
    Subspace,
    apply_map,
    enumerate_subspaces,
    galois_number,
    gaussian_binomial,
    image_basis,
    inv_matrix,
    is_invertible,
    kernel_basis,
    quotient_map,
    random_invertible,
    random_matrix,
    rank,
    rref,
    solve,
    subspaces_containing,
)


def test_rref_canonical_and_idempotent(rng):
    for q in (2, 3, 5):
        for _ in range(30):
            a = random_matrix(int(rng.integers(1, 6)), int(rng.integers(1, 6)), q, rng)
            r, piv = rref(a, q)
            assert rank(a, q) == len(piv)
            r2, piv2 = rref(r, q)
            assert np.array_equal(r, r2) and piv == piv2
            # pivot columns of an echelon form are unit vectors
            for i, p in enumerate(piv):
                col = r[:, p]
                assert col[i] == 1 and np.count_nonzero(col) == 1


def test_kernel_image_dimensions(rng):
    for q in (2, 3):
        for _ in range(30):
            a = random_matrix(4, 5, q, rng)
            k = kernel_basis(a, q)
            assert k.shape[0] == 5 - rank(a, q)
            assert not ((a @ k.T) % q).any()
            im = image_basis(a, q)
            assert im.shape[0] == rank(a, q)


def test_solve_and_inverse(rng):
    q = 3
    for _ in range(20):
        a = random_invertible(4, q, rng)
        b = random_matrix(4, 1, q, rng).ravel()
        x = solve(a, b, q)
        assert x is not None and np.array_equal((a @ x) % q, b % q)
        ai = inv_matrix(a, q)
        assert np.array_equal((a @ ai) % q, np.eye(4, dtype=np.int64))
        assert is_invertible(a, q)
    assert solve(np.zeros((2, 2), dtype=np.int64), np.array([1, 0]), 2) is None


def test_solve_known_case():
    x = solve(np.array([[1, 1], [0, 1]]), np.array([0, 1]), 2)
    assert np.array_equal(x % 2, np.array([1, 1]))


def test_subspace_membership_and_coords(rng):
    q = 2
    u = Subspace(q, 4, np.array([[1, 0, 1, 0], [0, 1, 1, 1]]))
    assert u.dim == 2
    for _ in range(20):
        coeff = rng.integers(0, q, size=2)
        v = (coeff @ u.basis) % q
        assert u.contains_vector(v)
        assert np.array_equal((u.coords(v) @ u.basis) % q, v)
    assert not u.contains_vector(np.array([1, 0, 0, 0]))


def test_subspace_sum_intersection_dims(rng):
    # dim(U + W) + dim(U ∩ W) = dim U + dim W
    for q in (2, 3):
        for _ in range(25):
            u = Subspace(q, 5, random_matrix(int(rng.integers(0, 4)), 5, q, rng))
            w = Subspace(q, 5, random_matrix(int(rng.integers(0, 4)), 5, q, rng))
            s = u.sum(w)
            i = u.intersect(w)
            assert s.dim + i.dim == u.dim + w.dim
            assert all(s.contains_vector(row) for row in u.basis)
            assert all(u.contains_vector(row) and w.contains_vector(row) for row in i.basis)


def test_zero_ambient_subspace():
    # maps into a zero-dimensional space must not crash the constructor
    z = Subspace(2, 0, np.zeros((0, 0), dtype=np.int64))
    assert z.dim == 0
    f = np.zeros((0, 3), dtype=np.int64)
    u = Subspace(2, 3, np.eye(3, dtype=np.int64))
    assert apply_map(f, u, 2).dim == 0
    assert list(enumerate_subspaces(0, 2))[0].dim == 0
    assert galois_number(0, 2) == 1


def test_quotient_map_contracts(rng):
    q = 3
    for _ in range(20):
        u = Subspace(q, 5, random_matrix(2, 5, q, rng))
        proj, sect = quotient_map(u)
        c = 5 - u.dim
        assert proj.shape == (c, 5) and sect.shape == (5, c)
        assert np.array_equal((proj @ sect) % q, np.eye(c, dtype=np.int64))
        assert not ((proj @ u.basis.T) % q).any()


def test_subspace_counts_match_gaussian_binomials():
    for q in (2, 3):
        for n in range(0, 5):
            subs = list(enumerate_subspaces(n, q))
            assert len(subs) == galois_number(n, q)
            from collections import Counter

            by_dim = Counter(s.dim for s in subs)
            for k in range(n + 1):
                assert by_dim[k] == gaussian_binomial(n, k, q)
            # echelon bases are canonical, so all subspaces are distinct
            assert len({s.basis.tobytes() for s in subs}) == len(subs)


def test_subspaces_containing_counts():
    q = 2
    w = Subspace(q, 4, np.array([[1, 0, 0, 0]]))
    overs = list(subspaces_containing(w))
    # overspaces of a line in F^4 correspond to subspaces of the 3-dim quotient
    assert len(overs) == galois_number(3, q)
    assert all(o.contains(w) for o in overs)


def test_gaussian_binomial_values():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 3) == 13
    assert galois_number(3, 2) == 16
    assert [galois_number(d, 2) for d in range(9)] == [
        1, 2, 5, 16, 67, 374, 2825, 29212, 417199,
    ]


def test_apply_map(rng):
    q = 2
    f = np.array([[1, 0], [0, 1], [1, 1]])
    u = Subspace(q, 2, np.array([[1, 1]]))
    img = apply_map(f, u, q)
    assert img.dim == 1 and img.contains_vector(np.array([1, 1, 0]))


def test_subspace_pickle(rng):
    u = Subspace(3, 4, random_matrix(2, 4, 3, rng))
    v = pickle.loads(pickle.dumps(u))
    assert np.array_equal(u.basis, v.basis) and u.ambient == v.ambient
