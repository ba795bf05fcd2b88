"""End-to-end acceptance battery.

One test per acceptance item, in order, each delegating to the named
verification suite with its contract parameters.  The pytest -v line of
each test is the pass/fail line; suite summaries (case counts, timing)
are printed and appear under -s or on failure.  Wall-clock figures are
targets, not assertions: nothing here fails on timing.
"""

from kronq.verify import run_suite


def _run(name, **params):
    result = run_suite(name, **params)
    print(result.summary())
    assert result.passed, result.summary()
    return result


def test_criterion_01_arithmetic():
    _run("arithmetic")


def test_criterion_02_euler_form():
    _run("euler", seed=20260819, pairs=216)


def test_criterion_03_embedding_invariance():
    _run("embed2k", q=2, mmax=3, threads=2)


def test_criterion_04_small_measures_exhaustive():
    _run("smallmeasure", threads=2)


def test_criterion_05_translate_growth():
    _run("taugrowth", seed=20260819, samples=20)


def test_criterion_06_oracle_agreement():
    _run("oracle", seed=20260819, samples=50, threads=2)


def test_criterion_07_takeoff_part():
    _run("takeoff", max_length=8, threads=2)


def test_criterion_08_gap_reports():
    _run("gapscan", max_length=7, family_length=9, threads=2)


def test_criterion_09_regular_factors():
    _run("regfactor", mmax=3, threads=2)


def test_criterion_10_order_axioms():
    _run("order", seed=20260819, triples=10000)


def test_criterion_10_krull_schmidt():
    _run("krullschmidt", seed=20260819, trials=100)
