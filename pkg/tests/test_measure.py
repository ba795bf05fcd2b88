import pickle

import numpy as np
import pytest

from kronq.measure import (
    EMPTY,
    GRMeasure,
    find_between,
    format_measure,
    mu_regular,
    mu_uniserial,
    mu_upper,
    parse_measure,
)


def test_constructor_validates():
    with pytest.raises(ValueError):
        GRMeasure((1, 1))
    with pytest.raises(ValueError):
        GRMeasure((2, 1))
    with pytest.raises(ValueError):
        GRMeasure((0, 1))
    assert GRMeasure(()).elements == ()


def test_immutability():
    m = GRMeasure((1, 2))
    with pytest.raises(AttributeError):
        m.elements = (1, 3)


def test_order_walk_cases():
    # at the first disagreement the smaller entry wins; prefixes lose
    assert GRMeasure((1, 2, 3)) > GRMeasure((1, 2, 4))
    assert GRMeasure((1, 2)) < GRMeasure((1, 2, 5))
    assert GRMeasure((1, 2)) > GRMeasure((1, 4))
    assert GRMeasure((1, 4)) < GRMeasure((1, 2))
    assert EMPTY < GRMeasure((1,))
    assert GRMeasure((1, 2, 4)) < GRMeasure((1, 2, 3))


def test_order_matches_symmetric_difference_rule(rng):
    def independent(i, j):
        si, sj = set(i.elements), set(j.elements)
        diff = si ^ sj
        if not diff:
            return 0
        return 1 if min(diff) in si else -1

    pool = []
    for _ in range(80):
        k = int(rng.integers(0, 6))
        vals = sorted(int(v) + 1 for v in rng.choice(14, size=k, replace=False))
        pool.append(GRMeasure(vals))
    for _ in range(4000):
        a, b = (pool[int(i)] for i in rng.integers(0, len(pool), size=2))
        assert a.compare(b) == independent(a, b)
        assert (a < b) == (independent(a, b) < 0)


def test_total_order_axioms(rng):
    pool = [mu_regular(t) for t in range(1, 6)] + [mu_upper(t) for t in range(6)]
    pool += [GRMeasure(()), GRMeasure((1, 3, 4)), GRMeasure((2,))]
    for a in pool:
        assert not a < a
        for b in pool:
            assert (a < b) + (a == b) + (a > b) == 1
            for c in pool:
                if a <= b and b <= c:
                    assert a <= c


def test_prefix_relations():
    base = GRMeasure((1, 2, 4))
    longer = base.extend(7)
    assert base < longer
    assert longer.starts_with(base)
    assert base.starts_with(base)
    assert not base.starts_with(longer)
    assert base.ll_relation(longer)
    assert not longer.ll_relation(base)
    assert EMPTY.ll_relation(base)


def test_extend_and_top():
    m = GRMeasure((1, 4))
    assert m.top == 4
    assert m.extend(11).elements == (1, 4, 11)
    assert m.drop_top() == GRMeasure((1,))
    with pytest.raises(ValueError):
        m.extend(4)
    with pytest.raises(ValueError):
        EMPTY.top


def test_families():
    assert mu_uniserial(3).elements == (1, 2, 3)
    assert mu_regular(1).elements == (1, 2)
    assert mu_regular(3).elements == (1, 2, 4, 6)
    assert mu_upper(0).elements == (1,)
    assert mu_upper(2).elements == (1, 2, 4, 5)
    with pytest.raises(ValueError):
        mu_regular(0)


def test_family_inequalities():
    for t in range(1, 20):
        assert mu_regular(t) < mu_regular(t + 1)
        assert mu_upper(t + 1) < mu_upper(t)
        for s in range(1, 20):
            assert mu_regular(s) < mu_upper(t)


def test_find_between():
    pool = [mu_regular(t) for t in range(1, 5)] + [mu_upper(t) for t in range(1, 5)]
    hits = find_between(mu_regular(2), mu_upper(2), pool)
    assert mu_regular(3) in hits
    assert mu_upper(3) in hits
    assert mu_regular(2) not in hits and mu_upper(2) not in hits


def test_format_parse_round_trip():
    for m in (EMPTY, GRMeasure((1,)), GRMeasure((1, 2, 4)), mu_upper(4)):
        assert parse_measure(format_measure(m)) == m
    assert format_measure(GRMeasure((1, 2, 4))) == "{1,2,4}"
    with pytest.raises(ValueError):
        parse_measure("{1,2")
    with pytest.raises(ValueError):
        parse_measure("{2,1}")


def test_hash_and_pickle():
    m = GRMeasure((1, 2, 4))
    assert m == GRMeasure([1, 2, 4])
    assert len({m, GRMeasure((1, 2, 4))}) == 1
    assert pickle.loads(pickle.dumps(m)) == m
