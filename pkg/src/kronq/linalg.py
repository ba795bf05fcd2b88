"""Exact linear algebra over the prime field F_q with numpy integer arrays.

All matrices are numpy int64 arrays holding canonical representatives in
[0, q).  Every operation reduces mod q immediately, so no intermediate
value ever leaves the field.  Subspaces of F_q^N are stored as row-reduced
echelon bases, which makes equality, hashing, and membership canonical.

The enumeration helpers (all subspaces of a small space, all overspaces
of a fixed subspace) are lazy generators guarded by explicit point caps.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

import numpy as np

from .config import DEFAULT_CAPS
from .errors import CapExceeded


def as_field(a, q: int) -> np.ndarray:
    """Copy to int64 and reduce into [0, q)."""
    return np.array(a, dtype=np.int64) % q


def matmul(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    return (a @ b) % q


def inv_scalar(a: int, q: int) -> int:
    a %= q
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    # q is prime, so Fermat gives the inverse
    return pow(a, q - 2, q)


def rref(a, q: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Row-reduced echelon form, returning (nonzero rows, pivot columns)."""
    A = as_field(a, q)
    if A.ndim != 2:
        raise ValueError("rref expects a 2-D array")
    rows, cols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = (A[r] * inv_scalar(int(A[r, c]), q)) % q
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % q
        pivots.append(c)
        r += 1
    return A[:r], tuple(pivots)


def rank(a, q: int) -> int:
    return len(rref(a, q)[1])


def kernel_basis(a, q: int) -> np.ndarray:
    """Canonical basis of the right null space, one vector per row."""
    A = as_field(a, q)
    rows, cols = A.shape
    R, piv = rref(A, q)
    free = [j for j in range(cols) if j not in piv]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    K = np.zeros((len(free), cols), dtype=np.int64)
    for t, j in enumerate(free):
        K[t, j] = 1
        for i, p in enumerate(piv):
            K[t, p] = (-R[i, j]) % q
    # already independent; re-reduce so the basis is canonical
    K, _ = rref(K, q)
    return K


def image_basis(a, q: int) -> np.ndarray:
    """Canonical row basis of the column space (rows of the reduced transpose)."""
    A = as_field(a, q)
    R, _ = rref(A.T, q)
    return R


def solve(a, b, q: int) -> Optional[np.ndarray]:
    """One solution x of A x = b, or None when the system is inconsistent."""
    A = as_field(a, q)
    bb = as_field(b, q).reshape(-1)
    if A.shape[0] != bb.shape[0]:
        raise ValueError("shape mismatch")
    aug = np.concatenate([A, bb[:, None]], axis=1)
    R, piv = rref(aug, q)
    if piv and piv[-1] == A.shape[1]:
        return None
    x = np.zeros(A.shape[1], dtype=np.int64)
    for i, p in enumerate(piv):
        x[p] = R[i, -1]
    return x


def inv_matrix(a, q: int) -> np.ndarray:
    """Inverse of a square matrix; raises ValueError when singular."""
    A = as_field(a, q)
    d = A.shape[0]
    if A.shape != (d, d):
        raise ValueError("inv_matrix expects a square matrix")
    aug = np.concatenate([A, np.eye(d, dtype=np.int64)], axis=1)
    R, piv = rref(aug, q)
    if len(piv) < d or any(p >= d for p in piv[:d]):
        raise ValueError("matrix is singular")
    return R[:, d:]


def is_invertible(a, q: int) -> bool:
    A = as_field(a, q)
    return A.shape[0] == A.shape[1] and rank(A, q) == A.shape[0]


# --- subspaces ---------------------------------------------------------


class Subspace:
    """Subspace of F_q^ambient with a canonical row-echelon basis."""

    __slots__ = ("q", "ambient", "basis", "pivots")

    def __init__(self, q: int, ambient: int, rows=None):
        if rows is None:
            basis = np.zeros((0, ambient), dtype=np.int64)
        else:
            basis = as_field(rows, q)
            basis = (
                np.zeros((0, ambient), dtype=np.int64)
                if basis.size == 0
                else basis.reshape(-1, ambient)
            )
        R, piv = rref(basis, q)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", R)
        object.__setattr__(self, "pivots", piv)

    @classmethod
    def _trusted(cls, q: int, ambient: int, reduced: np.ndarray, pivots: tuple[int, ...]) -> "Subspace":
        """Wrap rows already known to be in reduced echelon form."""
        self = object.__new__(cls)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", reduced)
        object.__setattr__(self, "pivots", pivots)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    def __getstate__(self):
        return (self.q, self.ambient, self.basis, self.pivots)

    def __setstate__(self, state):
        for name, value in zip(self.__slots__, state):
            object.__setattr__(self, name, value)

    @classmethod
    def zero(cls, q: int, ambient: int) -> "Subspace":
        return cls(q, ambient)

    @classmethod
    def full(cls, q: int, ambient: int) -> "Subspace":
        return cls(q, ambient, np.eye(ambient, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.q == other.q
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.q, self.ambient, self.basis.shape, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(q={self.q}, ambient={self.ambient}, dim={self.dim})"

    def contains_vector(self, v) -> bool:
        w = as_field(v, self.q).reshape(-1)
        if w.shape[0] != self.ambient:
            raise ValueError("ambient dimension mismatch")
        for i, p in enumerate(self.pivots):
            if w[p]:
                w = (w - w[p] * self.basis[i]) % self.q
        return not w.any()

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis)

    def coords(self, v) -> np.ndarray:
        """Coefficients of v in the echelon basis (v must lie in the subspace)."""
        w = as_field(v, self.q).reshape(-1)
        c = w[list(self.pivots)]
        if not self.contains_vector(w):
            raise ValueError("vector is not in the subspace")
        return c

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace(self.q, self.ambient, np.vstack([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        a, b = self.dim, other.dim
        if a == 0 or b == 0:
            return Subspace.zero(self.q, self.ambient)
        # pairs (c, d) with c . basis1 = d . basis2 span the intersection
        stacked = np.concatenate([self.basis.T, (-other.basis.T) % self.q], axis=1)
        K = kernel_basis(stacked, self.q)
        rows = (K[:, :a] @ self.basis) % self.q
        return Subspace(self.q, self.ambient, rows)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.q != other.q or self.ambient != other.ambient:
            raise ValueError("subspaces live in different spaces")


def apply_map(f: np.ndarray, u: Subspace, q: int) -> Subspace:
    """Image of the subspace under the matrix f (codomain = rows of f)."""
    rows = (u.basis @ f.T) % q
    return Subspace(q, f.shape[0], rows)


def quotient_map(u: Subspace) -> tuple[np.ndarray, np.ndarray]:
    """Projection Q: F^N -> F^c with kernel u, plus a section S with Q S = I.

    c = N - dim u.  Coordinates of the quotient are indexed by the
    nonpivot columns of the echelon basis; Q subtracts off the unique
    representative inside u and S re-embeds along the standard vectors.
    """
    q, N = u.q, u.ambient
    piv = set(u.pivots)
    nonpiv = [j for j in range(N) if j not in piv]
    c = len(nonpiv)
    Q = np.zeros((c, N), dtype=np.int64)
    S = np.zeros((N, c), dtype=np.int64)
    for t, j in enumerate(nonpiv):
        Q[t, j] = 1
        S[j, t] = 1
        for i, p in enumerate(u.pivots):
            Q[t, p] = (-u.basis[i, j]) % q
    return Q, S


def enumerate_subspaces(ambient: int, q: int, cap: int = DEFAULT_CAPS.subspace_points) -> Iterator[Subspace]:
    """All subspaces of F_q^ambient, dimension ascending, echelon form lex.

    Lazily built straight in echelon form: choose pivot columns, then run
    through every assignment of the free entries.  Guarded by q**ambient
    <= cap so a huge ambient space is refused before any work happens.
    """
    if q**ambient > cap:
        raise CapExceeded(f"q**ambient = {q**ambient} exceeds cap {cap}")
    yield Subspace.zero(q, ambient)
    for r in range(1, ambient + 1):
        for piv in itertools.combinations(range(ambient), r):
            pivset = set(piv)
            free = [(i, j) for i in range(r) for j in range(piv[i] + 1, ambient) if j not in pivset]
            base = np.zeros((r, ambient), dtype=np.int64)
            for i, p in enumerate(piv):
                base[i, p] = 1
            for vals in itertools.product(range(q), repeat=len(free)):
                B = base.copy()
                for (i, j), v in zip(free, vals):
                    B[i, j] = v
                yield Subspace._trusted(q, ambient, B, piv)


def subspaces_containing(w: Subspace, cap: int = DEFAULT_CAPS.subspace_points) -> Iterator[Subspace]:
    """All subspaces of the ambient space that contain w, including w itself.

    Overspaces of w correspond to subspaces of the quotient; each is
    pulled back through the section of the quotient map.
    """
    Q, S = quotient_map(w)
    c = Q.shape[0]
    for t in enumerate_subspaces(c, w.q, cap):
        if t.dim == 0:
            yield w
            continue
        lift = (t.basis @ S.T) % w.q
        yield Subspace(w.q, w.ambient, np.vstack([w.basis, lift]))


# --- counting ----------------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n, exact integer."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of F_q^n."""
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


# --- randomness --------------------------------------------------------


def random_matrix(rows: int, cols: int, q: int, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, q, size=(rows, cols), dtype=np.int64)


def random_invertible(dim: int, q: int, rng: np.random.Generator) -> np.ndarray:
    if dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    while True:
        A = random_matrix(dim, dim, q, rng)
        if rank(A, q) == dim:
            return A
