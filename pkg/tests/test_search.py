import itertools

import pytest

import support
from blocksets import (
    FamilyLabel,
    SearchTask,
    certify_no_other_t,
    characterize,
    exhaustive_extremal_search,
    is_minimal,
    is_t_fold_blocking,
    is_two_valued,
    max_size_bound,
    spectrum,
)


def _indices(result):
    return [ps.indices() for ps in result.sets]


def test_fano_t2_finds_all_plane_minus_point_sets():
    fano = support.desarguesian(2, 1)
    result = exhaustive_extremal_search(SearchTask(fano, 2))
    assert result.complete
    assert len(result.sets) == 7
    assert all(ps.size == 6 for ps in result.sets)
    assert all(ps.complement().size == 1 for ps in result.sets)
    # lexicographically sorted output
    assert _indices(result) == sorted(_indices(result))


def test_results_pass_independent_verifier():
    plane = support.desarguesian(3, 1)
    result = exhaustive_extremal_search(SearchTask(plane, 3))
    assert result.complete and len(result.sets) == 13
    bv = max_size_bound(3, 3)
    for ps in result.sets:
        assert ps.size == bv.bound
        assert is_t_fold_blocking(plane, ps, 3)
        assert is_minimal(plane, ps, 3)
        assert is_two_valued(spectrum(plane, ps), 3, bv.b)


def test_unattainable_bound_is_vacuous():
    fano = support.desarguesian(2, 1)
    result = exhaustive_extremal_search(SearchTask(fano, 1))  # D = 8, no square
    assert result.sets == []
    assert result.complete
    assert result.nodes == 0


def test_size_override_must_match_bound():
    fano = support.desarguesian(2, 1)
    assert exhaustive_extremal_search(SearchTask(fano, 2, size=6)).sets
    assert not exhaustive_extremal_search(SearchTask(fano, 2, size=5)).sets


def test_invalid_t_raises():
    fano = support.desarguesian(2, 1)
    with pytest.raises(ValueError):
        exhaustive_extremal_search(SearchTask(fano, 0))
    with pytest.raises(ValueError):
        exhaustive_extremal_search(SearchTask(fano, 2, node_budget=0))


@pytest.mark.parametrize("t", [1, 2])
def test_prune_safety_on_fano(t):
    fano = support.desarguesian(2, 1)
    pruned = exhaustive_extremal_search(SearchTask(fano, t, pruning=True))
    brute = exhaustive_extremal_search(SearchTask(fano, t, pruning=False))
    assert _indices(pruned) == _indices(brute)
    assert pruned.complete and brute.complete


def test_prune_safety_on_pg23():
    plane = support.desarguesian(3, 1)
    pruned = exhaustive_extremal_search(SearchTask(plane, 3, pruning=True))
    brute = exhaustive_extremal_search(SearchTask(plane, 3, pruning=False))
    assert _indices(pruned) == _indices(brute)


def test_worker_count_does_not_change_results():
    plane = support.desarguesian(3, 1)
    one = exhaustive_extremal_search(SearchTask(plane, 3, workers=1))
    two = exhaustive_extremal_search(SearchTask(plane, 3, workers=2))
    four = exhaustive_extremal_search(SearchTask(plane, 3, workers=4))
    assert _indices(one) == _indices(two) == _indices(four)
    assert one.complete == two.complete == four.complete
    assert one.nodes == two.nodes == four.nodes


def test_budget_truncation_reports_incomplete():
    plane = support.desarguesian(2, 2)
    result = exhaustive_extremal_search(SearchTask(plane, 2, node_budget=64))
    assert not result.complete


def _fano_collineation(plane):
    """Brute-force a nontrivial line-preserving point permutation."""
    line_set = set(plane.lines)
    for perm in itertools.permutations(range(7)):
        if perm == tuple(range(7)):
            continue
        if all(tuple(sorted(perm[i] for i in pts)) in line_set for pts in plane.lines):
            return list(perm)
    raise AssertionError("Fano plane has plenty of collineations")


def test_symmetry_restriction_is_sound():
    fano = support.desarguesian(2, 1)
    sigma = _fano_collineation(fano)
    full = exhaustive_extremal_search(SearchTask(fano, 2))
    sym = exhaustive_extremal_search(SearchTask(fano, 2, symmetry=[sigma]))
    assert len(sym.sets) <= len(full.sets)
    # closing the symmetric results under sigma recovers every full result
    closure = set()
    frontier = [frozenset(ps.indices()) for ps in sym.sets]
    while frontier:
        s = frontier.pop()
        if s in closure:
            continue
        closure.add(s)
        frontier.append(frozenset(sigma[i] for i in s))
    assert {frozenset(ps.indices()) for ps in full.sets} <= closure


def test_symmetry_rejects_non_collineation():
    fano = support.desarguesian(2, 1)
    not_a_perm = [0] * 7
    with pytest.raises(ValueError):
        exhaustive_extremal_search(SearchTask(fano, 2, symmetry=[not_a_perm]))
    # a permutation that shuffles a line into a non-line
    line_breaker = list(range(7))
    a, b = fano.lines[0][0], next(
        i for i in range(7) if i not in fano.lines[0]
    )
    line_breaker[a], line_breaker[b] = line_breaker[b], line_breaker[a]
    with pytest.raises(ValueError):
        exhaustive_extremal_search(SearchTask(fano, 2, symmetry=[line_breaker]))


def test_certify_pg22():
    fano = support.desarguesian(2, 1)
    report = certify_no_other_t(fano)
    assert report.matches_theory
    by_t = {e.t: e for e in report.entries}
    assert not by_t[1].attainable
    assert by_t[2].found == 7
    assert by_t[2].families == {FamilyLabel.PLANE_MINUS_POINT.value: 7}


def test_certify_pg23():
    plane = support.desarguesian(3, 1)
    report = certify_no_other_t(plane)
    assert report.matches_theory
    found = {e.t for e in report.entries if e.found}
    assert found == {3}


def test_certify_report_dict_shape():
    fano = support.desarguesian(2, 1)
    report = certify_no_other_t(fano)
    d = report.as_dict()
    assert d["order"] == 2
    assert d["expected_t"] == [2]
    assert d["matches_theory"] is True
    assert [e["t"] for e in d["results"]] == [1, 2]


def test_certify_characterizes_found_sets():
    plane = support.desarguesian(2, 2)
    report = certify_no_other_t(plane, t_values=[4])
    entry = report.entries[0]
    assert entry.found == 21
    assert entry.families == {FamilyLabel.PLANE_MINUS_POINT.value: 21}
    for ps in entry.sets:
        assert characterize(plane, ps, 4) is FamilyLabel.PLANE_MINUS_POINT
