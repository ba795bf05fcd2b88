"""Isomorphism-class scans and realized-measure reports.

Exhaustive scans enumerate orbits of the base-change group acting on
packed matrix tuples.  Each n-tuple of d2 x d1 matrices is encoded as an
integer key (each matrix row-major in base q, the tuple in base
q^(d1 d2)); one lookup table per group generator then advances whole
frontiers of keys at once, and a breadth-first sweep over the key space
yields exactly one canonical representative (the smallest key) per
isomorphism class.  Dimension vectors whose key space exceeds the
configured cap are recorded as skipped, never silently dropped.

Thin dimension vectors (source or sink dimension 1) avoid the sweep
altogether: their classes correspond to subspaces of the arrow space
F_q^n, written straight down from echelon bases.

Family scans construct the standard indecomposable families (projective
and injective chains, embedded two-arrow regulars and pre-modules, plus
one translate step of each) without any enumeration, which reaches
lengths the exhaustive sweep cannot.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .config import Caps, DEFAULT_CAPS
from .dimvec import classify_position
from .engine import MeasureStore
from .errors import PreconditionError, Undecided
from .linalg import enumerate_subspaces
from .measure import GRMeasure, format_measure, mu_regular, mu_upper, parse_measure
from .modules import (
    KroneckerModule,
    embed2k,
    is_isomorphic,
    p_module,
    preinj2k,
    preproj2k,
    q_module,
    regular2k,
    regular2k_inf,
    simple_module,
    tau_inverse_module,
    tau_module,
)


@dataclass
class ScanRecord:
    dim: tuple[int, int]
    measure: GRMeasure
    position: str
    provenance: str
    rep: KroneckerModule

    def sort_key(self):
        return (
            self.dim[0] + self.dim[1],
            self.dim,
            self.measure.elements,
            self.provenance,
            self.rep.key()[4:],
        )


@dataclass
class CatalogResult:
    n: int
    q: int
    max_length: int
    family_length: int
    records: list[ScanRecord]
    skipped: list[tuple[int, int, int]]  # (d1, d2, key_space_size)


# --- packed-key orbit sweep ----------------------------------------------


def _primitive_root(q: int) -> int:
    for g in range(2, q):
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = (x * g) % q
            seen.add(x)
        if len(seen) == q - 1:
            return g
    raise ValueError(f"no primitive root for {q}")


def _gl_generators(d: int, q: int) -> list[np.ndarray]:
    """Generating set of GL(d, q): all unit transvections, a cyclic shift,
    and one primitive scaling when the unit group is nontrivial."""
    gens: list[np.ndarray] = []
    eye = np.eye(d, dtype=np.int64)
    for i in range(d):
        for j in range(d):
            if i != j:
                t = eye.copy()
                t[i, j] = 1
                gens.append(t)
    if d >= 2:
        gens.append(np.roll(eye, 1, axis=0))
    if q > 2 and d >= 1:
        s = eye.copy()
        s[0, 0] = _primitive_root(q)
        gens.append(s)
    return gens


def _action_table(g: np.ndarray, side: str, d1: int, d2: int, q: int) -> np.ndarray:
    """Table over all packed d2 x d1 matrices for one generator action."""
    cells = d1 * d2
    B = q**cells
    qpows = q ** np.arange(cells, dtype=np.int64)
    codes = np.arange(B, dtype=np.int64)
    mats = ((codes[:, None] // qpows) % q).reshape(B, d2, d1)
    if side == "left":
        out = np.einsum("ij,bjk->bik", g, mats) % q
    else:
        out = np.einsum("bij,jk->bik", mats, g) % q
    return (out.reshape(B, cells) * qpows).sum(axis=1)


def _orbit_seeds(n: int, q: int, d1: int, d2: int) -> list[int]:
    """Smallest key of every base-change orbit on n-tuples of d2 x d1 matrices."""
    B = q ** (d1 * d2)
    total = B**n
    tables = [_action_table(g, "left", d1, d2, q) for g in _gl_generators(d2, q)]
    tables += [_action_table(g, "right", d1, d2, q) for g in _gl_generators(d1, q)]
    Bpows = B ** np.arange(n, dtype=np.int64)
    visited = np.zeros(total, dtype=bool)
    seeds: list[int] = []
    window = 1 << 20
    ptr = 0
    while ptr < total:
        unseen = ~visited[ptr : ptr + window]
        idx = int(np.argmax(unseen))
        if not unseen[idx]:
            ptr += window
            continue
        seed = ptr + idx
        seeds.append(seed)
        visited[seed] = True
        frontier = np.array([seed], dtype=np.int64)
        while frontier.size:
            digits = (frontier[:, None] // Bpows) % B
            images = [(t[digits] * Bpows).sum(axis=1) for t in tables]
            merged = np.unique(np.concatenate(images))
            fresh = merged[~visited[merged]]
            visited[fresh] = True
            frontier = fresh
        ptr = seed + 1
    assert visited.all(), "orbit sweep left unvisited keys"
    return seeds


def _decode_key(key: int, n: int, q: int, d1: int, d2: int) -> KroneckerModule:
    cells = d1 * d2
    B = q**cells
    maps = []
    for _ in range(n):
        code = key % B
        key //= B
        flat = np.empty(cells, dtype=np.int64)
        for j in range(cells):
            flat[j] = code % q
            code //= q
        maps.append(flat.reshape(d2, d1))
    return KroneckerModule(n, q, d1, d2, maps)


# --- per-dimension class enumeration --------------------------------------


def _thin_reps(n: int, q: int, d1: int, d2: int) -> list[KroneckerModule]:
    """Indecomposable classes at thin dimension vectors, one rep per class.

    For (1, k) the combined matrix of columns can be row-reduced, so the
    classes with full column rank correspond to k-dimensional subspaces
    of the arrow space F_q^n; (k, 1) is the transposed picture.
    """
    reps = []
    if d1 == 1:
        k = d2
        if k > n:
            return []
        for u in enumerate_subspaces(n, q, cap=q**n):
            if u.dim != k:
                continue
            maps = [u.basis[:, [i]] for i in range(n)]
            reps.append(KroneckerModule(n, q, 1, k, maps))
    elif d2 == 1:
        k = d1
        if k > n:
            return []
        for u in enumerate_subspaces(n, q, cap=q**n):
            if u.dim != k:
                continue
            maps = [u.basis[:, i][None, :] for i in range(n)]
            reps.append(KroneckerModule(n, q, k, 1, maps))
    else:
        raise ValueError("thin enumeration needs source or sink dimension 1")
    return reps


def indec_class_reps(
    n: int, q: int, d1: int, d2: int, caps: Caps = DEFAULT_CAPS, store: MeasureStore | None = None
):
    """Representatives of all indecomposable classes at one dimension vector.

    Returns (reps, skipped_size): skipped_size is None when the vector was
    fully enumerated, else the key-space size that exceeded the cap.
    """
    if store is None:
        store = MeasureStore(caps)
    if d1 < 0 or d2 < 0 or d1 + d2 == 0:
        return [], None
    if d1 == 0:
        return ([simple_module(n, q, 2)] if d2 == 1 else []), None
    if d2 == 0:
        return ([simple_module(n, q, 1)] if d1 == 1 else []), None
    if d1 == 1 or d2 == 1:
        return _thin_reps(n, q, d1, d2), None
    total = q ** (n * d1 * d2)
    if total > caps.exhaustive_tuples:
        return [], total
    reps = []
    for seed in _orbit_seeds(n, q, d1, d2):
        mod = _decode_key(seed, n, q, d1, d2)
        if store.is_indec(mod):
            reps.append(mod)
    return reps, None


def _record_for(mod: KroneckerModule, provenance: str, store: MeasureStore) -> ScanRecord:
    return ScanRecord(
        dim=mod.dim,
        measure=store.measure(mod),
        position=classify_position(mod.dim, mod.n),
        provenance=provenance,
        rep=mod,
    )


def _scan_dim_worker(args):
    """Process-pool entry: enumerate and measure one dimension vector."""
    n, q, d1, d2, caps = args
    store = MeasureStore(caps)
    reps, skipped = indec_class_reps(n, q, d1, d2, caps, store)
    if skipped is not None:
        return (d1, d2, None, skipped)
    rows = []
    for mod in reps:
        rec = _record_for(mod, "exhaustive", store)
        rows.append((rec.measure.elements, rec.position, mod.to_dict()))
    return (d1, d2, rows, None)


# --- families --------------------------------------------------------------


def family_reps(n: int, q: int, max_length: int, caps: Caps = DEFAULT_CAPS) -> list[KroneckerModule]:
    """Standard indecomposable families up to the given length.

    Projective and injective chains, embedded two-arrow regulars (every
    eigenvalue plus the extra point), embedded two-arrow pre-modules, and
    one translate step of each embedded module for extra coverage.
    """
    out: list[KroneckerModule] = []

    mod = p_module(n, q, 1)
    r = 1
    while mod.length <= max_length:
        out.append(mod)
        r += 1
        nxt = p_module(n, q, r)
        mod = nxt
    mod = q_module(n, q, 0)
    r = 0
    while mod.length <= max_length:
        out.append(mod)
        r += 1
        mod = q_module(n, q, r)

    embedded: list[KroneckerModule] = []
    m = 1
    while 2 * m <= max_length:
        for lam in range(q):
            embedded.append(embed2k(regular2k(m, q, lam), n))
        embedded.append(embed2k(regular2k_inf(m, q), n))
        m += 1
    m = 1
    while 2 * m + 1 <= max_length:
        embedded.append(embed2k(preproj2k(m, q), n))
        embedded.append(embed2k(preinj2k(m, q), n))
        m += 1
    out.extend(embedded)

    for mod in embedded:
        if mod.dim != (0, 1) and mod.dim != (1, n):
            stepped = tau_module(mod, caps)
            if 0 < stepped.length <= max_length:
                out.append(stepped)
        if mod.dim != (1, 0) and mod.dim != (n, 1):
            stepped = tau_inverse_module(mod, caps)
            if 0 < stepped.length <= max_length:
                out.append(stepped)
    return out


# --- catalog ----------------------------------------------------------------


class CatalogBuilder:
    """Incremental per-dimension scan cache for one (n, q)."""

    def __init__(self, n: int, q: int, caps: Caps = DEFAULT_CAPS):
        self.n = n
        self.q = q
        self.caps = caps
        self.store = MeasureStore(caps)
        self._dims: dict[tuple[int, int], list[ScanRecord] | int] = {}
        self._family: dict[int, list[ScanRecord]] = {}

    def _scan_dim(self, d1: int, d2: int) -> list[ScanRecord] | int:
        got = self._dims.get((d1, d2))
        if got is not None:
            return got
        reps, skipped = indec_class_reps(self.n, self.q, d1, d2, self.caps, self.store)
        if skipped is not None:
            self._dims[(d1, d2)] = skipped
            return skipped
        rows = [_record_for(mod, "exhaustive", self.store) for mod in reps]
        self._dims[(d1, d2)] = rows
        return rows

    def _ingest_worker_result(self, result) -> None:
        d1, d2, rows, skipped = result
        if skipped is not None:
            self._dims[(d1, d2)] = skipped
            return
        records = []
        for elements, position, mod_dict in rows:
            mod = KroneckerModule.from_dict(mod_dict)
            records.append(
                ScanRecord(
                    dim=(d1, d2),
                    measure=GRMeasure(elements),
                    position=position,
                    provenance="exhaustive",
                    rep=mod,
                )
            )
        self._dims[(d1, d2)] = records

    def exhaustive(self, max_length: int, threads: int = 1):
        """Scan all dimension vectors up to max_length; returns (records, skipped)."""
        todo = []
        for length in range(1, max_length + 1):
            for d1 in range(0, length + 1):
                d2 = length - d1
                if (d1, d2) not in self._dims:
                    todo.append((d1, d2))
        if threads > 1 and todo:
            heavy = [t for t in todo if min(t) >= 2]
            light = [t for t in todo if min(t) < 2]
            for d1, d2 in light:
                self._scan_dim(d1, d2)
            if heavy:
                with ProcessPoolExecutor(max_workers=threads) as pool:
                    args = [(self.n, self.q, d1, d2, self.caps) for d1, d2 in heavy]
                    for result in pool.map(_scan_dim_worker, args):
                        self._ingest_worker_result(result)
        else:
            for d1, d2 in todo:
                self._scan_dim(d1, d2)
        records: list[ScanRecord] = []
        skipped: list[tuple[int, int, int]] = []
        for length in range(1, max_length + 1):
            for d1 in range(0, length + 1):
                d2 = length - d1
                got = self._dims[(d1, d2)]
                if isinstance(got, int):
                    skipped.append((d1, d2, got))
                else:
                    records.extend(got)
        return records, skipped

    def families(self, max_length: int) -> list[ScanRecord]:
        got = self._family.get(max_length)
        if got is not None:
            return got
        records: list[ScanRecord] = []
        for mod in family_reps(self.n, self.q, max_length, self.caps):
            if not self.store.is_indec(mod):
                raise PreconditionError(f"family constructor produced a decomposable at {mod.dim}")
            if any(
                r.dim == mod.dim and is_isomorphic(r.rep, mod, self.caps) for r in records
            ):
                continue
            records.append(_record_for(mod, "families", self.store))
        self._family[max_length] = records
        return records

    def catalog(self, max_length: int, family_length: int = 0, threads: int = 1) -> CatalogResult:
        """Exhaustive scan merged with families; one record per iso class."""
        records, skipped = self.exhaustive(max_length, threads)
        merged = list(records)
        if family_length:
            by_dim: dict[tuple[int, int], list[ScanRecord]] = {}
            for r in records:
                by_dim.setdefault(r.dim, []).append(r)
            scanned = {
                (d1, d2)
                for (d1, d2), got in self._dims.items()
                if not isinstance(got, int) and d1 + d2 <= max_length
            }
            for fam in self.families(family_length):
                if fam.dim in scanned:
                    match = [
                        r
                        for r in by_dim.get(fam.dim, [])
                        if is_isomorphic(r.rep, fam.rep, self.caps)
                    ]
                    if not match:
                        raise PreconditionError(
                            f"family class at {fam.dim} missing from the exhaustive scan"
                        )
                    if match[0].measure != fam.measure:
                        raise PreconditionError(
                            f"measure mismatch between scan and family at {fam.dim}"
                        )
                    continue
                merged.append(fam)
        merged.sort(key=ScanRecord.sort_key)
        return CatalogResult(
            n=self.n,
            q=self.q,
            max_length=max_length,
            family_length=family_length,
            records=merged,
            skipped=skipped,
        )

    def sampled(self, max_length: int, samples: int, seed: int) -> list[ScanRecord]:
        """Random-search records: indecomposables found by seeded sampling."""
        rng = np.random.default_rng(seed)
        records: list[ScanRecord] = []
        for length in range(2, max_length + 1):
            for d1 in range(1, length):
                d2 = length - d1
                for _ in range(samples):
                    maps = [
                        rng.integers(0, self.q, size=(d2, d1), dtype=np.int64)
                        for _ in range(self.n)
                    ]
                    mod = KroneckerModule(self.n, self.q, d1, d2, maps)
                    try:
                        if not self.store.is_indec(mod):
                            continue
                    except Undecided:
                        continue
                    if any(
                        r.dim == mod.dim and is_isomorphic(r.rep, mod, self.caps)
                        for r in records
                    ):
                        continue
                    records.append(_record_for(mod, "sampled", self.store))
        records.sort(key=ScanRecord.sort_key)
        return records


def takeoff_sequence(records: list[ScanRecord]) -> list[GRMeasure]:
    """Distinct realized measures in increasing order."""
    return sorted({r.measure for r in records})


# --- gap report --------------------------------------------------------------


def gap_scan(
    n: int,
    q: int,
    m: int,
    max_length: int,
    family_length: int,
    caps: Caps = DEFAULT_CAPS,
    builder: CatalogBuilder | None = None,
    threads: int = 1,
) -> dict:
    """Realized-measure neighborhood report around the target measure mu_upper(m).

    For every realized measure I below the target, searches the catalog
    for a realized witness strictly between I and the target.  Measures
    left unwitnessed are benign exactly when they extend mu_upper(m+1):
    their witnesses are longer modules in the same band, beyond any fixed
    scan bound.  Everything else lands in `unwitnessed` (expected empty).
    Two structural checks run alongside: realized measures strictly
    between mu_regular(m) and the target must come from regular classes
    longer than 2m+1, and realized measures above the target must extend
    mu_upper(t) for some t <= m.
    """
    if builder is None:
        builder = CatalogBuilder(n, q, caps)
    cat = builder.catalog(max_length, family_length, threads)
    target = mu_upper(m)
    band = mu_upper(m + 1)
    reg_floor = mu_regular(m)

    by_measure: dict[GRMeasure, list[ScanRecord]] = {}
    for r in cat.records:
        by_measure.setdefault(r.measure, []).append(r)
    realized = sorted(by_measure)

    witnesses: dict[str, str] = {}
    deferred: list[str] = []
    unwitnessed: list[str] = []
    for i in realized:
        if not i < target:
            continue
        witness = next((j for j in realized if i < j < target), None)
        if witness is not None:
            witnesses[format_measure(i)] = format_measure(witness)
        elif i.starts_with(band):
            deferred.append(format_measure(i))
        else:
            unwitnessed.append(format_measure(i))

    violations_between: list[str] = []
    for i in realized:
        if reg_floor < i < target:
            for rec in by_measure[i]:
                if rec.position != "regular" or rec.dim[0] + rec.dim[1] <= 2 * m + 1:
                    violations_between.append(
                        f"{format_measure(i)} realized at {rec.dim} ({rec.position})"
                    )

    violations_above: list[str] = []
    for i in realized:
        if i > target:
            if not any(i.starts_with(mu_upper(t)) for t in range(m + 1)):
                violations_above.append(format_measure(i))

    return {
        "n": n,
        "q": q,
        "m": m,
        "max_length": max_length,
        "family_length": family_length,
        "target": format_measure(target),
        "band": format_measure(band),
        "realized": [format_measure(i) for i in realized],
        "witnesses": witnesses,
        "deferred_band": deferred,
        "unwitnessed": unwitnessed,
        "violations_between": violations_between,
        "violations_above": violations_above,
        "skipped": [list(s) for s in cat.skipped],
        "classes": len(cat.records),
    }


# --- CSV ----------------------------------------------------------------------


def catalog_to_csv(result: CatalogResult) -> str:
    """Aggregate records per (dim, measure, position, provenance) with class counts."""
    groups: dict[tuple, int] = {}
    for r in result.records:
        key = (r.dim, r.measure, r.position, r.provenance)
        groups[key] = groups.get(key, 0) + 1
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["dim1", "dim2", "measure", "position", "iso_count", "provenance"])
    for (dim, measure, position, provenance), count in sorted(
        groups.items(), key=lambda kv: (kv[0][0][0] + kv[0][0][1], kv[0][0], kv[0][1].elements)
    ):
        writer.writerow([dim[0], dim[1], format_measure(measure), position, count, provenance])
    for d1, d2, size in result.skipped:
        buf.write(f"# skipped dim=({d1},{d2}) key_space={size}\n")
    buf.write(
        f"# params n={result.n} q={result.q} max_length={result.max_length}"
        f" family_length={result.family_length}\n"
    )
    return buf.getvalue()


def parse_catalog_csv(text: str) -> list[dict]:
    """Rows of a catalog CSV as dictionaries, comments skipped."""
    rows = []
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    reader = csv.DictReader(lines)
    for row in reader:
        rows.append(
            {
                "dim": (int(row["dim1"]), int(row["dim2"])),
                "measure": parse_measure(row["measure"]),
                "position": row["position"],
                "iso_count": int(row["iso_count"]),
                "provenance": row["provenance"],
            }
        )
    return rows
