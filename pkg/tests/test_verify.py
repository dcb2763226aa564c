from vlk.diagram import carter_genus
from vlk.fixtures import TREF
from vlk.verify import derived_classical_corpus, random_corpus, run_suite


def test_random_corpus_is_reproducible():
    assert random_corpus(3, 10) == random_corpus(3, 10)
    assert all(1 <= len(c.crossings) <= 6 for c in random_corpus(3, 50))


def test_derived_classical_corpus():
    corpus = derived_classical_corpus(TREF, 20, 1)
    assert len(corpus) == 20
    assert all(carter_genus(c) == 0 and 3 < len(c.crossings) <= 8 for c in corpus)


def test_small_suites_pass():
    for suite in ("moves", "theorem7", "union", "theorem6"):
        res = run_suite(suite, seed=2, iterations=5)
        assert res.ok, res.lines()
