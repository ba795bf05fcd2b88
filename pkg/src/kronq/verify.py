"""Named verification suites bundling the package's checkable facts.

Each suite replays one block of evidence at desk scale: exact matrix
identities, exhaustive small-length scans, oracle cross-checks, and
property samples.  Suites are deterministic under a fixed seed and
return a structured result; the CLI turns a failing suite into a
nonzero exit code.
"""

from __future__ import annotations

import functools
import inspect
import time
from dataclasses import dataclass, field

import numpy as np

from . import dimvec
from .config import Caps, DEFAULT_CAPS
from .engine import gr_measure_oracle
from .linalg import inv_matrix, random_invertible
from .measure import GRMeasure, mu_regular, mu_uniserial, mu_upper, parse_measure
from .modules import (
    KroneckerModule,
    decompose,
    direct_sum,
    embed2k,
    ext_dim,
    has_11_submodule,
    hom_dim,
    is_isomorphic,
    enumerate_submodules,
    p_module,
    preinj2k,
    preproj2k,
    q_module,
    quotient_module,
    random_module,
    regular2k,
    regular2k_inf,
    simple_module,
    tau_module,
)
from .scan import CatalogBuilder, gap_scan, takeoff_sequence


@dataclass
class VerifySuiteResult:
    suite: str
    passed: bool
    cases: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = (
            f"{self.suite}: {status} cases={self.cases}"
            f" failures={len(self.failures)} seconds={self.seconds:.2f}"
        )
        for msg in self.failures[:20]:
            line += f"\n  - {msg}"
        if len(self.failures) > 20:
            line += f"\n  ... {len(self.failures) - 20} more"
        return line


class _Tally:
    """Case and failure accumulator threaded through a suite body."""

    def __init__(self):
        self.cases = 0
        self.failures: list[str] = []

    def check(self, ok: bool, msg: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(msg)

    def bump(self, n: int) -> None:
        self.cases += n


SUITES: dict[str, callable] = {}


def _suite(name: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(**params) -> VerifySuiteResult:
            t0 = time.perf_counter()
            tally = _Tally()
            fn(tally, **params)
            return VerifySuiteResult(
                suite=name,
                passed=not tally.failures,
                cases=tally.cases,
                failures=tally.failures,
                seconds=time.perf_counter() - t0,
            )

        SUITES[name] = run
        return run

    return wrap


@functools.lru_cache(maxsize=None)
def _default_builder(n: int, q: int) -> CatalogBuilder:
    return CatalogBuilder(n, q)


def get_builder(n: int, q: int, caps: Caps = DEFAULT_CAPS) -> CatalogBuilder:
    """Shared per-(n, q) builder so suites reuse each other's scans."""
    if caps == DEFAULT_CAPS:
        return _default_builder(n, q)
    return CatalogBuilder(n, q, caps)


# --- matrix arithmetic ----------------------------------------------------


@_suite("arithmetic")
def _arithmetic(tally: _Tally) -> None:
    ident = np.eye(2, dtype=np.int64)
    for n in range(1, 9):
        C = dimvec.cartan(n)
        C_inv = np.array([[1, 0], [-n, 1]], dtype=np.int64)
        phi = dimvec.coxeter(n)
        tally.check(np.array_equal(C @ C_inv, ident), f"n={n}: Cartan inverse")
        tally.check(
            np.array_equal(phi, -(C_inv.T @ C)),
            f"n={n}: Coxeter matrix is not -C^-T C",
        )
        tally.check(
            np.array_equal(phi @ dimvec.coxeter_inv(n), ident),
            f"n={n}: Coxeter inverse",
        )
    for n in range(2, 7):
        p = dimvec.preprojective_dims(n, 8)
        i = dimvec.preinjective_dims(n, 8)
        tally.check(p[0] == (0, 1) and p[1] == (1, n), f"n={n}: first projectives")
        tally.check(p[2] == (n, n * n - 1), f"n={n}: third projective dim")
        tally.check(p[3] == (n * n - 1, n ** 3 - 2 * n), f"n={n}: fourth projective dim")
        tally.check(i[0] == (1, 0) and i[1] == (n, 1), f"n={n}: first injectives")
        tally.check(i[2] == (n * n - 1, n), f"n={n}: third injective dim")
        tally.check(i[3] == (n ** 3 - 2 * n, n * n - 1), f"n={n}: fourth injective dim")
        for r in range(1, 7):
            want = tuple(n * np.array(i[r]))
            got = tuple(np.array(i[r + 1]) + np.array(i[r - 1]))
            tally.check(want == got, f"n={n}, r={r}: injective three-term recurrence")
            want = tuple(n * np.array(p[r]))
            got = tuple(np.array(p[r + 1]) + np.array(p[r - 1]))
            tally.check(want == got, f"n={n}, r={r}: projective three-term recurrence")


# --- Euler form -----------------------------------------------------------


@_suite("euler")
def _euler(tally: _Tally, seed: int = 20260819, pairs: int = 216) -> None:
    rng = np.random.default_rng(seed)
    combos = [(n, q) for n in (2, 3, 4) for q in (2, 3)]
    per = max(1, -(-pairs // len(combos)))
    for n, q in combos:
        for _ in range(per):
            dims = rng.integers(0, 5, size=4)
            X = random_module(n, q, int(dims[0]), int(dims[1]), rng)
            Y = random_module(n, q, int(dims[2]), int(dims[3]), rng)
            lhs = hom_dim(X, Y) - ext_dim(X, Y)
            rhs = dimvec.euler_form(X.dim, Y.dim, n)
            tally.check(
                lhs == rhs,
                f"n={n} q={q} dims {X.dim}x{Y.dim}: hom-ext={lhs} form={rhs}",
            )


# --- two-arrow family measures through the embedding ----------------------


def _measure_preproj(m: int) -> GRMeasure:
    return GRMeasure((1,) + tuple(2 * t + 1 for t in range(1, m + 1)))


@_suite("embed2k")
def _embed2k(tally: _Tally, q: int = 2, mmax: int = 3, threads: int = 1) -> None:
    store3 = get_builder(3, q).store
    store2 = get_builder(2, q).store
    for m in range(1, mmax + 1):
        flavors = [
            ("preproj", preproj2k(m, q), _measure_preproj(m)),
            ("preinj", preinj2k(m, q), mu_upper(m)),
            ("regular lam=inf", regular2k_inf(m, q), mu_regular(m)),
        ]
        for lam in (0, 1):
            flavors.append((f"regular lam={lam}", regular2k(m, q, lam), mu_regular(m)))
        for label, mod, want in flavors:
            emb = embed2k(mod, 3)
            got = store3.measure(emb)
            tally.check(got == want, f"m={m} {label}: embedded measure {got} != {want}")
            flat = store2.measure(mod)
            tally.check(
                flat == got,
                f"m={m} {label}: embedding changed the measure {flat} -> {got}",
            )
    # embedding invariance up to total length 8 (the regular pair at m=4)
    for label, mod in (
        ("regular lam=0", regular2k(4, q, 0)),
        ("regular lam=inf", regular2k_inf(4, q)),
    ):
        emb = embed2k(mod, 3)
        got = store3.measure(emb)
        tally.check(got == mu_regular(4), f"m=4 {label}: embedded measure {got}")
        tally.check(store2.measure(mod) == got, f"m=4 {label}: embedding changed the measure")


# --- small measures determine small shapes --------------------------------


@_suite("smallmeasure")
def _smallmeasure(tally: _Tally, threads: int = 1) -> None:
    builder = get_builder(3, 2)
    records, skipped = builder.exhaustive(5, threads)
    tally.check(not skipped, f"length <= 5 should scan fully, skipped {skipped}")
    mu_11 = GRMeasure((1, 2))
    mu_21 = GRMeasure((1, 2, 3))
    for r in records:
        tally.check(
            (r.measure == mu_11) == (r.dim == (1, 1)),
            f"{r.dim}: measure {r.measure} vs the (1,1) characterization",
        )
        tally.check(
            (r.measure == mu_21) == (r.dim == (2, 1)),
            f"{r.dim}: measure {r.measure} vs the (2,1) characterization",
        )


# --- translate growth from (1,1) seeds ------------------------------------


@_suite("taugrowth")
def _taugrowth(tally: _Tally, seed: int = 20260819, samples: int = 20) -> None:
    rng = np.random.default_rng(seed)
    prefix = GRMeasure((1, 2, 3))
    for n in (3, 4):
        for q in (2, 3, 5):
            store = get_builder(n, q).store
            p1 = p_module(n, q, 1)
            done = 0
            while done < samples:
                X = random_module(n, q, 1, 1, rng)
                if not any(f.any() for f in X.maps):
                    continue
                done += 1
                tX = tau_module(X)
                tally.check(
                    tX.dim == (n * n - n - 1, n - 1),
                    f"n={n} q={q}: dim tau X = {tX.dim}",
                )
                tally.check(
                    hom_dim(X, tX) >= n - 2,
                    f"n={n} q={q}: hom(X, tau X) < n-2",
                )
                e = ext_dim(X, p1)
                tally.check(e >= 1, f"n={n} q={q}: ext(X, sink simple) = {e}")
                tally.check(e == n - 1, f"n={n} q={q}: ext(X, sink simple) != n-1")
                if (n, q) == (3, 2):
                    mu = store.measure(tX)
                    tally.check(
                        mu.starts_with(prefix),
                        f"tau X measure {mu} does not start with {prefix}",
                    )
    # translate duality on sampled pairs: ext(X, Y) = hom(Y, tau X)
    for n, q in ((3, 2), (3, 3)):
        store = get_builder(n, q).store
        pdims = {(0, 1), (1, n)}
        done = 0
        while done < 15:
            d1, d2 = int(rng.integers(1, 3)), int(rng.integers(1, 3))
            X = random_module(n, q, d1, d2, rng)
            if (d1, d2) in pdims or not store.is_indec(X):
                continue
            done += 1
            Y = random_module(n, q, int(rng.integers(0, 3)), int(rng.integers(0, 3)), rng)
            e, h = ext_dim(X, Y), hom_dim(Y, tau_module(X))
            tally.check(e == h, f"n={n} q={q} {X.dim}x{Y.dim}: ext={e} hom(Y,tauX)={h}")


# --- pruned engine against the definition oracle ---------------------------


@_suite("oracle")
def _oracle(tally: _Tally, seed: int = 20260819, samples: int = 50, threads: int = 1) -> None:
    builder = get_builder(3, 2)
    records, _ = builder.exhaustive(4, threads)
    memo: dict = {}
    for r in records:
        om = gr_measure_oracle(r.rep, builder.caps, _memo=memo)
        tally.check(om == r.measure, f"{r.dim}: engine {r.measure} oracle {om}")
    rng = np.random.default_rng(seed)
    dims5 = [(1, 4), (2, 3), (3, 2), (4, 1)]
    for trial in range(samples):
        d1, d2 = dims5[trial % len(dims5)]
        M = random_module(3, 2, d1, d2, rng)
        em = builder.store.measure(M)
        om = gr_measure_oracle(M, builder.caps, _memo=memo)
        tally.check(em == om, f"sampled {M.dim}: engine {em} oracle {om}")


# --- take-off start --------------------------------------------------------


@_suite("takeoff")
def _takeoff(tally: _Tally, max_length: int = 8, threads: int = 1) -> None:
    builder = get_builder(3, 2)
    records, skipped = builder.exhaustive(max_length, threads)
    tally.bump(len(records))
    seq = takeoff_sequence(records)
    one = GRMeasure((1,))
    one4 = GRMeasure((1, 4))
    tally.check(seq[0] == one, f"first take-off measure is {seq[0]}")
    tally.check(seq[1] == one4, f"second take-off measure is {seq[1]}")
    tally.check(seq[1] == seq[0].extend(4), "second take-off measure extends the first")
    hits = [r for r in records if r.measure == one4]
    p2 = p_module(3, 2, 2)
    tally.check(
        len(hits) == 1 and hits[0].dim == (1, 3) and is_isomorphic(hits[0].rep, p2),
        f"{{1,4}} realized by {[(r.dim) for r in hits]}, expected only the (1,3) projective",
    )
    tally.check(
        not any(one < r.measure < one4 for r in records),
        "a realized measure sits strictly between {1} and {1,4}",
    )
    # any indecomposable of length >= 2 contains one of length <= n+1 = 4,
    # so no skipped dimension can hide a measure with second entry > 4
    for r in records:
        if len(r.measure.elements) >= 2:
            tally.check(
                r.measure.elements[1] <= 4,
                f"{r.dim}: second measure entry {r.measure.elements[1]} > 4",
            )


# --- neighborhood of the upper measures ------------------------------------


@_suite("gapscan")
def _gapscan(
    tally: _Tally,
    m: int | None = None,
    q: int | None = None,
    max_length: int = 7,
    family_length: int = 9,
    threads: int = 1,
) -> None:
    ms = (1, 2) if m is None else (m,)
    qs = (2, 3) if q is None else (q,)
    for q_ in qs:
        builder = get_builder(3, q_)
        for m_ in ms:
            rep = gap_scan(
                3, q_, m_, max_length, family_length, builder=builder, threads=threads
            )
            tag = f"m={m_} q={q_}"
            tally.bump(len(rep["realized"]))
            tally.check(
                not rep["unwitnessed"],
                f"{tag}: unwitnessed measures {rep['unwitnessed']}",
            )
            tally.check(
                not rep["violations_between"],
                f"{tag}: non-regular or short classes between the bounds: {rep['violations_between']}",
            )
            tally.check(
                not rep["violations_above"],
                f"{tag}: measures above the target with a foreign prefix: {rep['violations_above']}",
            )
            band = parse_measure(rep["band"])
            tally.check(
                all(parse_measure(d).starts_with(band) for d in rep["deferred_band"]),
                f"{tag}: deferred entries must extend the band prefix",
            )


# --- regular factors carry a (1,1) submodule --------------------------------


@_suite("regfactor")
def _regfactor(tally: _Tally, mmax: int = 3, threads: int = 1) -> None:
    lower = {mu_regular(t): (t, t) for t in range(1, mmax + 1)}
    upper = {mu_upper(t): (t + 1, t) for t in range(1, mmax + 1)}
    for q in (2, 3):
        builder = get_builder(3, q)
        cat = builder.catalog(7, 9, threads)
        for r in cat.records:
            shape = lower.get(r.measure) or upper.get(r.measure)
            if shape is None:
                continue
            tally.check(
                r.dim == shape,
                f"q={q}: measure {r.measure} realized at {r.dim}, expected {shape}",
            )
            for u1, u2 in enumerate_submodules(r.rep, builder.caps):
                quo = quotient_module(r.rep, u1, u2)
                if quo.d1 + quo.d2 == 0:
                    continue
                if dimvec.classify_position(quo.dim, 3) != "regular":
                    continue
                if not builder.store.is_indec(quo):
                    continue
                tally.check(
                    has_11_submodule(quo),
                    f"q={q}: regular factor {quo.dim} of a {r.measure} module"
                    " has no (1,1) submodule",
                )


# --- order axioms and family inequalities -----------------------------------


def _independent_cmp(i: GRMeasure, j: GRMeasure) -> int:
    """Sign of i vs j straight from the symmetric-difference definition."""
    si, sj = set(i.elements), set(j.elements)
    diff = si ^ sj
    if not diff:
        return 0
    return 1 if min(diff) in si else -1


def _random_measure(rng: np.random.Generator) -> GRMeasure:
    k = int(rng.integers(0, 7))
    if k == 0:
        return GRMeasure(())
    vals = rng.choice(12, size=k, replace=False) + 1
    return GRMeasure(sorted(int(v) for v in vals))


@_suite("order")
def _order(tally: _Tally, seed: int = 20260819, triples: int = 10000) -> None:
    rng = np.random.default_rng(seed)
    pool = [_random_measure(rng) for _ in range(64)]
    for _ in range(triples):
        a, b, c = (pool[int(i)] for i in rng.integers(0, len(pool), size=3))
        cab = _independent_cmp(a, b)
        agree = ((a < b) == (cab < 0)) and ((a == b) == (cab == 0))
        tally.check(agree, f"walk order disagrees with set definition on {a} vs {b}")
        if a <= b and b <= c:
            tally.check(a <= c, f"transitivity broken on {a}, {b}, {c}")
        if a <= b and b <= a:
            tally.check(a == b, f"antisymmetry broken on {a}, {b}")
    for _ in range(200):
        base = _random_measure(rng)
        if len(base.elements) == 0:
            continue
        longer = base.extend(base.top + int(rng.integers(1, 5)))
        tally.check(base < longer, f"proper prefix {base} not below {longer}")
        tally.check(longer.starts_with(base), "starts_with broken on an extension")
    for t in range(1, 26):
        tally.check(mu_uniserial(t) < mu_uniserial(t + 1), f"uniserial chain at {t}")
        tally.check(mu_regular(t) < mu_regular(t + 1), f"lower family not ascending at {t}")
        tally.check(mu_upper(t + 1) < mu_upper(t), f"upper family not descending at {t}")
    for _ in range(300):
        s, t = int(rng.integers(1, 26)), int(rng.integers(1, 26))
        tally.check(
            mu_regular(s) < mu_upper(t),
            f"lower family member {s} not below upper member {t}",
        )


# --- unique decomposition ----------------------------------------------------


def _summand_pool(n: int, q: int) -> list[KroneckerModule]:
    pool = [
        simple_module(n, q, 1),
        simple_module(n, q, 2),
        p_module(n, q, 2),
        q_module(n, q, 1),
        embed2k(regular2k(1, q, 0), n),
        embed2k(regular2k(2, q, 1), n),
        embed2k(regular2k_inf(1, q), n),
        embed2k(preproj2k(1, q), n),
        embed2k(preinj2k(1, q), n),
    ]
    return pool


@_suite("krullschmidt")
def _krullschmidt(tally: _Tally, seed: int = 20260819, trials: int = 100) -> None:
    rng = np.random.default_rng(seed)
    pools = {q: _summand_pool(3, q) for q in (2, 3)}
    for trial in range(trials):
        q = (2, 3)[trial % 2]
        pool = pools[q]
        while True:
            count = int(rng.integers(2, 4))
            parts = [pool[int(i)] for i in rng.integers(0, len(pool), size=count)]
            total = functools.reduce(direct_sum, parts)
            if total.d1 + total.d2 <= 8:
                break
        g1 = random_invertible(total.d1, q, rng)
        g2 = random_invertible(total.d2, q, rng)
        g1i = inv_matrix(g1, q)
        twisted = KroneckerModule(
            3, q, total.d1, total.d2, [(g2 @ f @ g1i) % q for f in total.maps]
        )
        pieces = decompose(twisted)
        remaining = list(pieces)
        matched = len(pieces) == len(parts)
        if matched:
            for part in parts:
                hit = next(
                    (p for p in remaining if is_isomorphic(p, part)), None
                )
                if hit is None:
                    matched = False
                    break
                remaining.remove(hit)
        tally.check(
            matched,
            f"trial {trial} q={q}: expected {[p.dim for p in parts]},"
            f" recovered {[p.dim for p in pieces]}",
        )


def _accepted_params(fn, params: dict) -> dict:
    wanted = inspect.signature(fn).parameters
    return {k: v for k, v in params.items() if k in wanted and v is not None}


def run_suite(name: str, **params) -> VerifySuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    fn = SUITES[name]
    return fn(**_accepted_params(fn.__wrapped__, params))


def run_all(**params) -> list[VerifySuiteResult]:
    return [run_suite(name, **params) for name in SUITES]
