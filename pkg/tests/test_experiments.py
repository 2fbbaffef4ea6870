import pytest

from swapnet.errors import BadSpec
from swapnet.experiments import SUITES, all_labeled_graphs, child_seed, run_experiment, sse_corpus
from swapnet.sumgame import check_sse

SMALL = {
    "potential-exactness": {"exhaustive_n": 4, "random_pairs": 300},
    "sse-structure": {"instances": 40, "n_max": 8},
    "local-equilibrium-star": {"exhaustive_n": 4, "runs": 10, "n_max": 12},
    "limited-query-convergence": {"n": 7, "cs": [1, 3], "runs": 10},
    "bounds-validation": {"n_max": 8, "trees": 5},
    "better-response-convergence": {"runs": 10, "n_max": 15},
    "stopping-rule": {"n": 7, "runs": 10},
    "oracle-equivalence": {"comparisons": 2000, "n_max": 6},
}


def test_labeled_graph_counts():
    assert [sum(1 for _ in all_labeled_graphs(n)) for n in range(1, 6)] == [1, 2, 8, 64, 1024]


def test_child_seed_stable():
    assert child_seed(0, 1) == child_seed(0, 1) != child_seed(0, 2)
    assert child_seed(0, 1) != child_seed(1, 1)


@pytest.mark.parametrize("suite", SUITES)
def test_suite_reports_are_deterministic(suite):
    a = run_experiment(suite, SMALL[suite], seed=11)
    b = run_experiment(suite, SMALL[suite], seed=11)
    assert a.to_json(timings=False) == b.to_json(timings=False)
    assert a.criteria and a.instances
    lines = a.summary_lines()
    assert len(lines) == 1 + len(a.criteria)


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "local-equilibrium-star"])
def test_small_suites_pass(suite):
    assert run_experiment(suite, SMALL[suite], seed=11).passed


def test_sse_corpus_members_are_certified():
    corpus = sse_corpus(4, instances=30, n_max=9)
    assert all(check_sse(g).is_equilibrium for _, g in corpus)


def test_unknown_suite():
    with pytest.raises(BadSpec):
        run_experiment("nope")
