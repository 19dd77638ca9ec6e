import pytest

from rainbowmatch import (BipartiteGraph, matching_number,
                          rainbow_matching_max)
from rainbowmatch.search import (conjecture_search, doubled_family,
                                 graded_union_condition)

from .helpers import family_on

K22 = BipartiteGraph.complete(2)


def test_graded_union_condition():
    fam = family_on(K22, {(1, 1)}, {(2, 2)}, {(1, 2), (2, 1)})
    assert graded_union_condition(fam, 2)
    weak = family_on(K22, {(1, 1)}, {(1, 1)}, {(1, 2), (2, 1)})
    assert not graded_union_condition(weak, 2)  # the pair {1,2} stays at 1


def test_doubled_family_structure():
    fam = family_on(K22, {(1, 1), (2, 2)})
    doubled = doubled_family(fam)
    assert doubled.graph.left_size == doubled.graph.right_size == 4
    assert doubled.sets[0] == {(1, 1), (2, 2), (3, 3), (4, 4)}
    # three disjoint perfect-matching members admit a full rainbow matching
    trio = family_on(K22, {(1, 1), (2, 2)}, {(1, 2), (2, 1)}, {(1, 1), (2, 2)})
    assert matching_number(trio.graph, trio.sets[0]) == 2
    size, _ = rainbow_matching_max(doubled_family(trio))
    assert size == 3


def test_search_c41_base_case():
    result = conjecture_search("c4.1", k=1, budget=200, seed=3)
    assert not result.found
    assert result.instances == 200


def test_search_c41_exhaustive_k22():
    result = conjecture_search("c4.1", k=2, graph=K22, budget=10_000,
                               exhaustive=True)
    assert not result.found
    assert result.exhaustive
    assert result.instances == 680  # multisets of 3 nonempty edge subsets
    assert 0 < result.hypothesis_passed < result.instances


def test_search_c43_sampled():
    result = conjecture_search("c4.3", k=2, budget=300, seed=11)
    assert not result.found
    assert result.instances == 300
    assert result.hypothesis_passed > 0


def test_search_is_deterministic():
    a = conjecture_search("c4.1", k=2, budget=150, seed=5)
    b = conjecture_search("c4.1", k=2, budget=150, seed=5)
    assert (a.instances, a.hypothesis_passed, a.found) == \
        (b.instances, b.hypothesis_passed, b.found)


def test_search_validates_arguments():
    with pytest.raises(ValueError):
        conjecture_search("c9.9", k=2)
    with pytest.raises(ValueError):
        conjecture_search("c4.1", k=0)
    with pytest.raises(ValueError):
        # the K_{3,3} exhaustive space dwarfs any sane budget
        conjecture_search("c4.1", k=2, graph=BipartiteGraph.complete(3),
                          budget=10_000, exhaustive=True)


def test_search_counterexample_detection_on_planted_instance():
    # feed the checker a family violating the graded bound on purpose, via
    # a tiny graph where the conjecture's premise cannot be met: k = 2 on a
    # single-edge graph never passes the hypothesis, so nothing is found
    tiny = BipartiteGraph(1, 1, frozenset({(1, 1)}))
    result = conjecture_search("c4.1", k=2, graph=tiny, budget=50,
                               exhaustive=True)
    assert not result.found
    assert result.hypothesis_passed == 0
