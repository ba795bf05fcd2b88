import numpy as np
import pytest

from kronq.engine import MeasureStore, gr_measure, gr_measure_oracle
from kronq.errors import CapExceeded, PreconditionError
from kronq.linalg import Subspace
from kronq.measure import EMPTY, GRMeasure, mu_regular, mu_uniserial, mu_upper
from kronq.modules import (
    KroneckerModule,
    direct_sum,
    embed2k,
    enumerate_submodules,
    is_isomorphic,
    p_module,
    preinj2k,
    preproj2k,
    q_module,
    random_module,
    regular2k,
    regular2k_inf,
    restrict_module,
    simple_module,
    tau_module,
)


def _emb(m, n=3):
    return embed2k(m, n)


def _one11(q=2):
    return KroneckerModule(3, q, 1, 1, [[[1]], [[0]], [[0]]])


def test_measure_table(store32):
    mu = store32.measure
    assert mu(simple_module(3, 2, 1)) == GRMeasure((1,))
    assert mu(simple_module(3, 2, 2)) == GRMeasure((1,))
    assert mu(p_module(3, 2, 2)) == GRMeasure((1, 4))
    assert mu(q_module(3, 2, 1)) == GRMeasure((1, 2, 3, 4))
    assert mu(_one11()) == GRMeasure((1, 2))
    assert mu(_emb(preproj2k(1, 2))) == GRMeasure((1, 3))
    assert mu(_emb(preinj2k(1, 2))) == GRMeasure((1, 2, 3))
    for m in (1, 2, 3):
        assert mu(_emb(regular2k(m, 2, 0))) == mu_regular(m)
        assert mu(_emb(regular2k(m, 2, 1))) == mu_regular(m)
    assert mu(_emb(regular2k_inf(2, 2))) == mu_regular(2)
    assert mu(_emb(preinj2k(2, 2))) == mu_upper(2)
    assert mu(_emb(preproj2k(2, 2))) == GRMeasure((1, 3, 5))
    assert mu(q_module(3, 2, 1)) == mu_uniserial(4)


def test_measure_deeper_modules(store32):
    assert store32.measure(p_module(3, 2, 3)) == GRMeasure((1, 4, 11))
    t = tau_module(_one11())
    assert t.dim == (5, 2)
    assert store32.measure(t) == GRMeasure((1, 2, 3, 5, 6, 7))


def test_zero_module_and_caps():
    store = MeasureStore()
    zero = KroneckerModule(3, 2, 0, 0, [np.zeros((0, 0))] * 3)
    assert store.measure(zero) == EMPTY
    big = _emb(regular2k(7, 2, 0))
    with pytest.raises(CapExceeded):
        store.measure(big)
    with pytest.raises(CapExceeded):
        gr_measure_oracle(_emb(regular2k(3, 2, 0)))


def test_zero_maps_are_semisimple(store32):
    flat = KroneckerModule(3, 2, 2, 3, [np.zeros((3, 2))] * 3)
    assert store32.measure(flat) == GRMeasure((1,))


def test_direct_sum_takes_max(store32, rng):
    for _ in range(8):
        x = random_module(3, 2, int(rng.integers(0, 3)), int(rng.integers(1, 3)), rng)
        y = random_module(3, 2, int(rng.integers(1, 3)), int(rng.integers(0, 3)), rng)
        mx, my = store32.measure(x), store32.measure(y)
        assert store32.measure(direct_sum(x, y)) == max(mx, my)


def test_submodule_measures_never_exceed(store32, rng):
    for _ in range(5):
        m = random_module(3, 2, 2, 2, rng)
        mu = store32.measure(m)
        for u1, u2 in enumerate_submodules(m):
            assert store32.measure(restrict_module(m, u1, u2)) <= mu


def test_gr_submodule_pairs(store32):
    m = _emb(regular2k(2, 2, 0))
    pairs = store32.gr_submodule_pairs(m)
    assert len(pairs) == 1
    u1, u2 = pairs[0]
    assert (u1.dim, u2.dim) == (1, 1)
    sub = restrict_module(m, u1, u2)
    assert store32.is_indec(sub)
    assert store32.measure(sub) == store32.max_proper_measure(m)
    assert store32.is_gr_inclusion(m, u1, u2)
    # the simple socle inside the projective is its unique deepest point
    p2 = p_module(3, 2, 2)
    assert store32.max_proper_measure(p2) == GRMeasure((1,))
    assert store32.is_gr_inclusion(p2, Subspace.zero(2, 1), Subspace(2, 3, [[1, 0, 0]]))
    full = (Subspace.full(2, 1), Subspace.full(2, 3))
    assert not store32.is_gr_inclusion(p2, *full)


def test_witness_chain(store32):
    for m in (p_module(3, 2, 2), _emb(regular2k(2, 2, 0)), q_module(3, 2, 1)):
        chain = store32.witness_chain(m)
        mu = store32.measure(m)
        assert len(chain) == len(mu.elements)
        assert tuple(u1.dim + u2.dim for u1, u2 in chain) == mu.elements
        assert (chain[-1][0].dim, chain[-1][1].dim) == m.dim
    with pytest.raises(PreconditionError):
        store32.witness_chain(direct_sum(_one11(), _one11()))


def test_max_proper_of_decomposable(store32):
    # for a decomposable module the maximum is attained by a proper
    # submodule already, so nothing is dropped
    s = direct_sum(_one11(), simple_module(3, 2, 2))
    assert store32.max_proper_measure(s) == store32.measure(s) == GRMeasure((1, 2))


def test_oracle_spot_checks(store32):
    for m in (
        p_module(3, 2, 2),
        _one11(),
        _emb(regular2k(2, 2, 0)),
        _emb(preinj2k(1, 2)),
        q_module(3, 2, 1),
    ):
        assert gr_measure_oracle(m) == store32.measure(m)


def test_gr_measure_fresh_store():
    assert gr_measure(_one11()) == GRMeasure((1, 2))


def test_achieving_submodule_is_summand_when_decomposable(store32, rng):
    # in a decomposable module the maximal measure is already attained by
    # one of the indecomposable summands
    from kronq.modules import decompose, match_summands

    for _ in range(6):
        m = random_module(3, 2, 2, 2, rng)
        parts = decompose(m)
        if len(parts) < 2:
            continue
        best = max(store32.measure(p) for p in parts)
        assert store32.measure(m) == best
        winners = [p for p in parts if store32.measure(p) == best]
        assert winners


def test_store_shared_across_categories(store32):
    # one store serves several (n, q) pairs without cross-talk
    a = _one11(q=2)
    b = KroneckerModule(3, 3, 1, 1, [[[1]], [[0]], [[0]]])
    c = KroneckerModule(4, 2, 1, 1, [[[1]], [[0]], [[0]], [[0]]])
    store = MeasureStore()
    assert store.measure(a) == store.measure(b) == store.measure(c) == GRMeasure((1, 2))
    assert store.class_count() >= 3
