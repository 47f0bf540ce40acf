import numpy as np
import pytest

from graphent import ValidationError
from graphent.validation import random_graph, run_validation


def test_random_graph_respects_bounds(rng):
    for _ in range(50):
        g = random_graph(rng, 2, 6)
        assert 2 <= g.n_vertices <= 6
        assert all(i < j < g.n_vertices for i, j in g.edges)


def test_report_passes_and_lists_every_property():
    report = run_validation(max_n=4, trials=8, seed=0)
    assert report.passed
    assert len(report.results) == 6
    assert all(line.startswith("pass") for line in report.lines())


def test_rejects_bad_arguments():
    with pytest.raises(ValidationError):
        run_validation(trials=0)
    with pytest.raises(ValidationError):
        run_validation(max_n=1)
