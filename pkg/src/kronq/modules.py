"""Finite-dimensional representations of the n-arrow two-vertex quiver over F_q.

A module is a pair of vector spaces (F_q^d1 at the source, F_q^d2 at the
sink) together with n matrices of shape d2 x d1 acting on column vectors.
Everything downstream (hom spaces, the translate, submodule enumeration,
indecomposability) works directly on these integer matrices.

Homomorphisms (A, B) from X to Y satisfy B fX_i = fY_i A for every arrow
and are computed as the kernel of one stacked intertwining matrix.  The
identity

    dim Hom(X, Y) - dim Ext(X, Y) = <dim X, dim Y>

holds by rank-nullity of that matrix, which is also how Ext dimensions
are obtained.

Indecomposability is decided through the endomorphism algebra: a module
splits exactly when End contains an idempotent other than 0 and 1.  The
search first tries cheap splitting candidates (powers of basis elements
and their scalar shifts split off kernel and image once the power is
neither nilpotent nor invertible), then falls back to an exhaustive scan
of End when the algebra is small enough, and otherwise refuses with
Undecided rather than guessing.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

import numpy as np

from .config import Caps, DEFAULT_CAPS
from .errors import CapExceeded, PreconditionError, Undecided
from . import dimvec
from .linalg import (
    Subspace,
    apply_map,
    as_field,
    image_basis,
    is_invertible,
    kernel_basis,
    quotient_map,
    rank,
    subspaces_containing,
    enumerate_subspaces,
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


class KroneckerModule:
    """Immutable representation: n maps of shape d2 x d1 over F_q."""

    __slots__ = ("n", "q", "d1", "d2", "maps", "_sig", "_key")

    def __init__(self, n: int, q: int, d1: int, d2: int, maps):
        if n < 1:
            raise ValueError("need at least one arrow")
        if q not in _SMALL_PRIMES:
            raise ValueError(f"q must be a small prime, got {q}")
        if d1 < 0 or d2 < 0:
            raise ValueError("dimensions must be nonnegative")
        if len(maps) != n:
            raise ValueError(f"expected {n} maps, got {len(maps)}")
        clean = []
        for f in maps:
            m = as_field(f, q).reshape(d2, d1)
            m.setflags(write=False)
            clean.append(m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d1", d1)
        object.__setattr__(self, "d2", d2)
        object.__setattr__(self, "maps", tuple(clean))
        object.__setattr__(self, "_sig", None)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("KroneckerModule is immutable")

    def __getstate__(self):
        return (self.n, self.q, self.d1, self.d2, self.maps, self._sig, self._key)

    def __setstate__(self, state):
        for name, value in zip(self.__slots__, state):
            object.__setattr__(self, name, value)

    # --- identity -------------------------------------------------------

    @property
    def dim(self) -> tuple[int, int]:
        return (self.d1, self.d2)

    @property
    def length(self) -> int:
        return self.d1 + self.d2

    def key(self) -> tuple:
        """Exact identity of the matrix tuple (not the iso class)."""
        if self._key is None:
            k = (self.n, self.q, self.d1, self.d2) + tuple(m.tobytes() for m in self.maps)
            object.__setattr__(self, "_key", k)
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, KroneckerModule) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"KroneckerModule(n={self.n}, q={self.q}, dim={self.dim})"

    def is_zero_maps(self) -> bool:
        return all(not m.any() for m in self.maps)

    def signature(self) -> tuple:
        """Cheap iso invariant: dims plus sorted ranks of maps and pair sums."""
        if self._sig is None:
            single = sorted(rank(m, self.q) for m in self.maps)
            pairs = sorted(
                rank((self.maps[i] + self.maps[j]) % self.q, self.q)
                for i in range(self.n)
                for j in range(i + 1, self.n)
            )
            sig = (self.n, self.q, self.d1, self.d2, tuple(single), tuple(pairs))
            object.__setattr__(self, "_sig", sig)
        return self._sig

    # --- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "dim": [self.d1, self.d2],
            "maps": [m.tolist() for m in self.maps],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "KroneckerModule":
        try:
            n = int(data["n"])
            q = int(data["q"])
            d1, d2 = (int(x) for x in data["dim"])
            maps = data["maps"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed module dictionary: {exc}") from None
        return cls(n, q, d1, d2, maps)


def direct_sum(x: KroneckerModule, y: KroneckerModule) -> KroneckerModule:
    _check_same_category(x, y)
    d1, d2 = x.d1 + y.d1, x.d2 + y.d2
    maps = []
    for fx, fy in zip(x.maps, y.maps):
        f = np.zeros((d2, d1), dtype=np.int64)
        f[: x.d2, : x.d1] = fx
        f[x.d2 :, x.d1 :] = fy
        maps.append(f)
    return KroneckerModule(x.n, x.q, d1, d2, maps)


def _check_same_category(x: KroneckerModule, y: KroneckerModule) -> None:
    if x.n != y.n or x.q != y.q:
        raise ValueError(f"modules live over different quivers: {(x.n, x.q)} vs {(y.n, y.q)}")


# --- hom and ext ---------------------------------------------------------


def _hom_matrix(x: KroneckerModule, y: KroneckerModule) -> np.ndarray:
    """Stacked intertwining matrix whose kernel is Hom(x, y).

    Unknowns are (vec A | vec B) in column-major vec order, A: X1 -> Y1,
    B: X2 -> Y2; each arrow contributes the block row
    [kron(I_{x1}, fY_i) | -kron(fX_i^T, I_{y2})] expressing fY_i A = B fX_i.
    """
    q = x.q
    x1, x2, y1, y2 = x.d1, x.d2, y.d1, y.d2
    ca, cb = y1 * x1, y2 * x2
    block = y2 * x1
    H = np.zeros((x.n * block, ca + cb), dtype=np.int64)
    eye_x1 = np.eye(x1, dtype=np.int64)
    eye_y2 = np.eye(y2, dtype=np.int64)
    for i in range(x.n):
        r0 = i * block
        if ca:
            H[r0 : r0 + block, :ca] = np.kron(eye_x1, y.maps[i])
        if cb:
            H[r0 : r0 + block, ca:] = (-np.kron(x.maps[i].T, eye_y2)) % q
    return H


def hom_basis(x: KroneckerModule, y: KroneckerModule) -> list[tuple[np.ndarray, np.ndarray]]:
    """Basis of Hom(x, y) as pairs (A, B) of vertex matrices."""
    _check_same_category(x, y)
    q = x.q
    ca = y.d1 * x.d1
    H = _hom_matrix(x, y)
    K = kernel_basis(H, q)
    out = []
    for row in K:
        A = row[:ca].reshape((y.d1, x.d1), order="F")
        B = row[ca:].reshape((y.d2, x.d2), order="F")
        out.append((A, B))
    return out


def hom_dim(x: KroneckerModule, y: KroneckerModule) -> int:
    _check_same_category(x, y)
    H = _hom_matrix(x, y)
    return H.shape[1] - rank(H, x.q)


def ext_dim(x: KroneckerModule, y: KroneckerModule) -> int:
    _check_same_category(x, y)
    H = _hom_matrix(x, y)
    return H.shape[0] - rank(H, x.q)


def end_blocks(m: KroneckerModule) -> np.ndarray:
    """Basis of End(m) packed as block-diagonal (d1+d2) square matrices."""
    L = m.length
    pairs = hom_basis(m, m)
    out = np.zeros((len(pairs), L, L), dtype=np.int64)
    for k, (A, B) in enumerate(pairs):
        out[k, : m.d1, : m.d1] = A
        out[k, m.d1 :, m.d1 :] = B
    return out


# --- submodules ----------------------------------------------------------


def is_submodule_pair(m: KroneckerModule, u1: Subspace, u2: Subspace) -> bool:
    if u1.ambient != m.d1 or u2.ambient != m.d2 or u1.q != m.q or u2.q != m.q:
        raise ValueError("subspaces do not match the module")
    return all(u2.contains(apply_map(f, u1, m.q)) for f in m.maps)


def image_sum(m: KroneckerModule, u1: Subspace) -> Subspace:
    """Smallest sink subspace through which every arrow pushes u1."""
    w = Subspace.zero(m.q, m.d2)
    for f in m.maps:
        w = w.sum(apply_map(f, u1, m.q))
    return w


def enumerate_submodules(
    m: KroneckerModule, caps: Caps = DEFAULT_CAPS
) -> Iterator[tuple[Subspace, Subspace]]:
    """All submodule pairs (u1, u2), including (0, 0) and the full pair."""
    for u1 in enumerate_subspaces(m.d1, m.q, caps.subspace_points):
        w = image_sum(m, u1)
        yield from ((u1, u2) for u2 in subspaces_containing(w, caps.subspace_points))


def has_11_submodule(m: KroneckerModule) -> bool:
    """True iff some submodule pair of dims (1,1) has a nonzero induced map.

    A (1,1) pair through the source vector v exists with a nonzero arrow
    exactly when the images f_1(v)..f_n(v) span one dimension.
    """
    if m.d1 == 0 or m.d2 == 0:
        return False
    for v in itertools.product(range(m.q), repeat=m.d1):
        vec = np.array(v, dtype=np.int64)
        if not vec.any():
            continue
        images = np.stack([(f @ vec) % m.q for f in m.maps])
        if rank(images, m.q) == 1:
            return True
    return False


def restrict_module(m: KroneckerModule, u1: Subspace, u2: Subspace) -> KroneckerModule:
    """The submodule (u1, u2) as an abstract module in the echelon bases."""
    q = m.q
    maps = []
    for f in m.maps:
        cols = (f @ u1.basis.T) % q
        G = cols[list(u2.pivots), :]
        if not np.array_equal((u2.basis.T @ G) % q, cols):
            raise PreconditionError("not a submodule pair: images leave the sink subspace")
        maps.append(G)
    return KroneckerModule(m.n, q, u1.dim, u2.dim, maps)


def quotient_module(m: KroneckerModule, u1: Subspace, u2: Subspace) -> KroneckerModule:
    """The quotient by the submodule pair (u1, u2)."""
    if not is_submodule_pair(m, u1, u2):
        raise PreconditionError("not a submodule pair")
    q = m.q
    q1, s1 = quotient_map(u1)
    q2, _ = quotient_map(u2)
    maps = [(q2 @ f @ s1) % q for f in m.maps]
    return KroneckerModule(m.n, q, m.d1 - u1.dim, m.d2 - u2.dim, maps)


# --- indecomposability ---------------------------------------------------


def _split_from_projector(m: KroneckerModule, E: np.ndarray):
    """Submodule pairs (image, kernel) of an idempotent endomorphism."""
    q = m.q
    A = E[: m.d1, : m.d1]
    B = E[m.d1 :, m.d1 :]
    im = (Subspace(q, m.d1, image_basis(A, q)), Subspace(q, m.d2, image_basis(B, q)))
    ker = (Subspace(q, m.d1, kernel_basis(A, q)), Subspace(q, m.d2, kernel_basis(B, q)))
    return im, ker


def _matrix_power(a: np.ndarray, e: int, q: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    base = a % q
    while e:
        if e & 1:
            out = (out @ base) % q
        base = (base @ base) % q
        e >>= 1
    return out


def find_splitting(m: KroneckerModule, caps: Caps = DEFAULT_CAPS):
    """A pair of complementary submodule pairs, or None when indecomposable.

    None is only returned when indecomposability is certain (local quick
    paths, or an exhaustive idempotent search of End).  When End is too
    large to scan and no splitting was found, raises Undecided.
    """
    L = m.length
    if L <= 1:
        return None
    q = m.q
    if m.is_zero_maps():
        # direct sum of simples: peel one coordinate line off
        if m.d1 > 0:
            u = (Subspace(q, m.d1, np.eye(m.d1, dtype=np.int64)[:1]), Subspace.zero(q, m.d2))
            w = (Subspace(q, m.d1, np.eye(m.d1, dtype=np.int64)[1:]), Subspace.full(q, m.d2))
        else:
            u = (Subspace.zero(q, 0), Subspace(q, m.d2, np.eye(m.d2, dtype=np.int64)[:1]))
            w = (Subspace.zero(q, 0), Subspace(q, m.d2, np.eye(m.d2, dtype=np.int64)[1:]))
        return u, w

    ends = end_blocks(m)
    e = ends.shape[0]
    if e == 1:
        # End is spanned by the identity, hence local
        return None

    eye = np.eye(L, dtype=np.int64)

    # cheap pass: a power of an endomorphism that is neither nilpotent nor
    # invertible splits the module into its kernel and image
    candidates = [ends[k] for k in range(e)]
    candidates += [(ends[i] + ends[j]) % q for i in range(e) for j in range(i + 1, e)]
    for phi in candidates:
        for lam in range(q):
            N = _matrix_power((phi - lam * eye) % q, L, q)
            r = rank(N, q)
            if 0 < r < L:
                im, ker = _split_from_projector(m, N)
                if im[0].dim + im[1].dim + ker[0].dim + ker[1].dim == L:
                    return im, ker

    total = q**e
    if total > caps.idempotent_points:
        raise Undecided(
            f"endomorphism algebra of dimension {e} exceeds the idempotent scan cap"
        )

    # conclusive pass: scan End for an idempotent other than 0 and 1
    qpows = q ** np.arange(e, dtype=np.int64)
    chunk = 4096
    for start in range(1, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (codes[:, None] // qpows) % q
        E = np.tensordot(coeffs, ends, axes=(1, 0)) % q
        sq = np.einsum("kij,kjl->kil", E, E) % q
        idem = (sq == E).all(axis=(1, 2))
        nontrivial = idem & ~(E == eye).all(axis=(1, 2))
        hits = np.nonzero(nontrivial)[0]
        if hits.size:
            return _split_from_projector(m, E[hits[0]])
    return None


def is_indecomposable(m: KroneckerModule, caps: Caps = DEFAULT_CAPS) -> bool:
    if m.length == 0:
        return False
    if m.length == 1:
        return True
    return find_splitting(m, caps) is None


def decompose(m: KroneckerModule, caps: Caps = DEFAULT_CAPS) -> list[KroneckerModule]:
    """Indecomposable summands, deterministic order, lengths descending."""
    if m.length == 0:
        return []
    if m.length == 1:
        return [m]
    split = find_splitting(m, caps)
    if split is None:
        return [m]
    (u1, u2), (w1, w2) = split
    parts = decompose(restrict_module(m, u1, u2), caps) + decompose(
        restrict_module(m, w1, w2), caps
    )
    parts.sort(key=lambda p: (-p.length, p.dim, p.key()))
    return parts


def is_isomorphic(x: KroneckerModule, y: KroneckerModule, caps: Caps = DEFAULT_CAPS) -> bool:
    """Exact isomorphism test.

    Both sides are decomposed first and the indecomposable summands are
    matched up, so the hom-space scan only ever runs between
    indecomposables, where the spaces stay small.
    """
    _check_same_category(x, y)
    if x.dim != y.dim:
        return False
    if x.length == 0:
        return True
    zx, zy = x.is_zero_maps(), y.is_zero_maps()
    if zx or zy:
        return zx and zy
    if x.signature() != y.signature():
        return False
    if np.array_equal(np.stack(x.maps), np.stack(y.maps)):
        return True
    return match_summands(decompose(x, caps), decompose(y, caps), caps)


def match_summands(
    dx: list[KroneckerModule], dy: list[KroneckerModule], caps: Caps = DEFAULT_CAPS
) -> bool:
    """Match two already-decomposed summand lists up to isomorphism."""
    if len(dx) != len(dy):
        return False
    if len(dx) == 1:
        return _iso_indec(dx[0], dy[0], caps)
    unmatched = list(dy)
    for a in dx:
        for i, b in enumerate(unmatched):
            if a.dim == b.dim and _iso_indec(a, b, caps):
                unmatched.pop(i)
                break
        else:
            return False
    return True


def _iso_indec(x: KroneckerModule, y: KroneckerModule, caps: Caps) -> bool:
    """Isomorphism scan for two indecomposables: look for an invertible hom."""
    if x.dim != y.dim:
        return False
    if x.length <= 1:
        return x.dim == y.dim
    if x.signature() != y.signature():
        return False
    if np.array_equal(np.stack(x.maps), np.stack(y.maps)):
        return True
    basis = hom_basis(x, y)
    h = len(basis)
    if h == 0:
        return False
    q = x.q
    if q**h > caps.hom_scan_points:
        raise Undecided(f"hom space of dimension {h} exceeds the isomorphism scan cap")
    for coeffs in itertools.product(range(q), repeat=h):
        if not any(coeffs):
            continue
        A = sum(c * basis[k][0] for k, c in enumerate(coeffs) if c)
        if not is_invertible(A % q, q):
            continue
        B = sum(c * basis[k][1] for k, c in enumerate(coeffs) if c)
        if is_invertible(B % q, q):
            return True
    return False


# --- named modules -------------------------------------------------------


def simple_module(n: int, q: int, vertex: int) -> KroneckerModule:
    if vertex == 1:
        return KroneckerModule(n, q, 1, 0, [np.zeros((0, 1), dtype=np.int64)] * n)
    if vertex == 2:
        return KroneckerModule(n, q, 0, 1, [np.zeros((1, 0), dtype=np.int64)] * n)
    raise ValueError("vertex must be 1 or 2")


def p_module(n: int, q: int, r: int) -> KroneckerModule:
    """r-th module of the projective family: P_1 = (0,1), P_2 = (1,n), then
    each further one is the inverse translate of the module two steps back."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if r == 1:
        return simple_module(n, q, 2)
    if r == 2:
        eye = np.eye(n, dtype=np.int64)
        return KroneckerModule(n, q, 1, n, [eye[:, [i]] for i in range(n)])
    return tau_inverse_module(p_module(n, q, r - 2))


def q_module(n: int, q: int, r: int) -> KroneckerModule:
    """r-th module of the injective family: Q_0 = (1,0), Q_1 = (n,1), then
    each further one is the translate of the module two steps back."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return simple_module(n, q, 1)
    if r == 1:
        eye = np.eye(n, dtype=np.int64)
        return KroneckerModule(n, q, n, 1, [eye[[i], :] for i in range(n)])
    return tau_module(q_module(n, q, r - 2))


def regular2k(m: int, q: int, lam: int) -> KroneckerModule:
    """Two-arrow regular module of dimension (m, m): f1 = I, f2 = lam I + N
    with N the upper shift (ones on the superdiagonal)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    eye = np.eye(m, dtype=np.int64)
    nil = np.eye(m + 1, dtype=np.int64)[1:, :-1]  # ones on the superdiagonal
    f2 = (lam * eye + nil) % q
    return KroneckerModule(2, q, m, m, [eye, f2])


def regular2k_inf(m: int, q: int) -> KroneckerModule:
    """Two-arrow regular module at the remaining point: f1 = N, f2 = I."""
    if m < 1:
        raise ValueError("m must be at least 1")
    eye = np.eye(m, dtype=np.int64)
    nil = np.eye(m + 1, dtype=np.int64)[1:, :-1]
    return KroneckerModule(2, q, m, m, [nil, eye])


def preproj2k(m: int, q: int) -> KroneckerModule:
    """Two-arrow preprojective of dimension (m, m+1)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    f1 = np.zeros((m + 1, m), dtype=np.int64)
    f2 = np.zeros((m + 1, m), dtype=np.int64)
    f1[:m, :] = np.eye(m, dtype=np.int64)
    f2[1:, :] = np.eye(m, dtype=np.int64)
    return KroneckerModule(2, q, m, m + 1, [f1, f2])


def preinj2k(m: int, q: int) -> KroneckerModule:
    """Two-arrow preinjective of dimension (m+1, m)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    f1 = np.zeros((m, m + 1), dtype=np.int64)
    f2 = np.zeros((m, m + 1), dtype=np.int64)
    f1[:, :m] = np.eye(m, dtype=np.int64)
    f2[:, 1:] = np.eye(m, dtype=np.int64)
    return KroneckerModule(2, q, m + 1, m, [f1, f2])


def embed2k(m: KroneckerModule, n: int) -> KroneckerModule:
    """Pad a two-arrow module with n - 2 zero maps.

    The submodule lattice is unchanged (zero maps impose no conditions),
    so filtration measures transfer verbatim, and Hom/End computed over
    the padded quiver agree with the two-arrow ones.
    """
    if m.n != 2:
        raise PreconditionError("embed2k expects a two-arrow module")
    if n < 2:
        raise ValueError("target quiver needs at least two arrows")
    zero = np.zeros((m.d2, m.d1), dtype=np.int64)
    return KroneckerModule(n, m.q, m.d1, m.d2, list(m.maps) + [zero] * (n - 2))


# --- the translate -------------------------------------------------------


def tau_module(m: KroneckerModule, caps: Caps = DEFAULT_CAPS) -> KroneckerModule:
    """Auslander-Reiten translate of an indecomposable non-projective module.

    Implemented as two reflections.  First the sink is replaced by the
    kernel of the total map (x_1, ..., x_n) -> sum f_i x_i, then the
    source by the kernel of the analogous total map of the new tuple.
    The dimension contract (result = input times the Coxeter matrix) is
    asserted on every call.
    """
    _require_indec(m, caps)
    if m.dim == (0, 1) or m.dim == (1, m.n):
        raise PreconditionError(f"translate is undefined on the projective {m.dim}")
    q, n = m.q, m.n
    total = np.concatenate(m.maps, axis=1) if m.d1 else np.zeros((m.d2, 0), dtype=np.int64)
    K = kernel_basis(total, q)  # rows span the new sink space
    k = K.shape[0]
    g = [K[:, i * m.d1 : (i + 1) * m.d1].T for i in range(n)]  # d1 x k each
    total2 = np.concatenate(g, axis=1) if k else np.zeros((m.d1, 0), dtype=np.int64)
    Lb = kernel_basis(total2, q)
    ell = Lb.shape[0]
    maps = [Lb[:, i * k : (i + 1) * k].T for i in range(n)]  # k x ell each
    out = KroneckerModule(n, q, ell, k, maps)
    expected = dimvec.tau_dim(m.dim, n)
    if out.dim != expected:
        raise PreconditionError(
            f"translate of {m.dim} has dimension {out.dim}, expected {expected};"
            " the input was not translate-compatible"
        )
    return out


def tau_inverse_module(m: KroneckerModule, caps: Caps = DEFAULT_CAPS) -> KroneckerModule:
    """Inverse translate of an indecomposable non-injective module.

    Dual construction with cokernels: the source is replaced by the
    cokernel of x -> (f_1 x, ..., f_n x), then the sink by the cokernel
    of the analogous total map.
    """
    _require_indec(m, caps)
    if m.dim == (1, 0) or m.dim == (m.n, 1):
        raise PreconditionError(f"inverse translate is undefined on the injective {m.dim}")
    q, n = m.q, m.n
    stacked = np.concatenate(m.maps, axis=0) if m.d2 else np.zeros((0, m.d1), dtype=np.int64)
    im = Subspace(q, n * m.d2, stacked.T)
    q1, _ = quotient_map(im)  # c x (n d2)
    c = q1.shape[0]
    g = [q1[:, i * m.d2 : (i + 1) * m.d2] for i in range(n)]  # c x d2 each
    stacked2 = np.concatenate(g, axis=0) if c else np.zeros((0, m.d2), dtype=np.int64)
    im2 = Subspace(q, n * c, stacked2.T)
    q2, _ = quotient_map(im2)  # (nc - d2) x (n c)
    maps = [q2[:, i * c : (i + 1) * c] for i in range(n)]
    out = KroneckerModule(n, q, c, q2.shape[0], maps)
    expected = dimvec.tau_inv_dim(m.dim, n)
    if out.dim != expected:
        raise PreconditionError(
            f"inverse translate of {m.dim} has dimension {out.dim}, expected {expected};"
            " the input was not translate-compatible"
        )
    return out


def _require_indec(m: KroneckerModule, caps: Caps) -> None:
    if not is_indecomposable(m, caps):
        raise PreconditionError("the translate is only applied to indecomposable modules")


# --- randomness ----------------------------------------------------------


def random_module(n: int, q: int, d1: int, d2: int, rng: np.random.Generator) -> KroneckerModule:
    maps = [rng.integers(0, q, size=(d2, d1), dtype=np.int64) for _ in range(n)]
    return KroneckerModule(n, q, d1, d2, maps)
