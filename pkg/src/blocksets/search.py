"""Exhaustive bitset backtracking for extremal minimal t-fold blocking sets.

Subsets are enumerated in lexicographic point order, include branch first,
with three prunes: a line that can no longer reach t points is dead, a line
already holding b+1 points takes no more, and a branch that cannot reach the
target size is cut.  Every completed set is re-verified through the blocking
module before it is reported; search bookkeeping is never trusted.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import blocking
from .extremal import classify_prime_power, max_size_bound
from .families import FamilyLabel, PointSet, characterize
from .plane import IncidencePlane

DEFAULT_NODE_BUDGET = 10**9

# Planes with at least this many points are split into fixed root subtrees;
# the decomposition depends only on the plane, never on the worker count, so
# results and completeness are identical for any number of workers.
_SPLIT_MIN_POINTS = 12
_SPLIT_DEPTH = 4


@dataclass
class SearchTask:
    """One extremal search: find all minimal t-fold blocking sets of size m.

    m defaults to the attainable bound for (order, t); a task whose bound is
    not attainable, or whose explicit size differs from it, is vacuous and
    returns an empty, complete result immediately.
    """

    plane: IncidencePlane
    t: int
    size: int | None = None
    pruning: bool = True
    workers: int = 1
    node_budget: int = DEFAULT_NODE_BUDGET
    symmetry: Sequence[Sequence[int]] | None = None


@dataclass
class SearchResult:
    sets: list[PointSet]
    nodes: int
    seconds: float
    complete: bool


class _BudgetExceeded(Exception):
    pass


def _validate_extremal(plane, mask, t, b):
    """Leaf filter: accept only sets the blocking-module verifier certifies."""
    ps = PointSet(plane, mask)
    spec = blocking.spectrum(plane, ps)
    if not blocking.is_two_valued(spec, t, b):
        return None
    if not blocking.is_t_fold_blocking(plane, ps, t):
        return None
    if not blocking.is_minimal(plane, ps, t):
        return None
    return ps


def _orbit_minima(num_points: int, perms: Sequence[Sequence[int]]) -> set[int]:
    minima = set()
    seen = [False] * num_points
    for start in range(num_points):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for perm in perms:
                y = perm[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            seen[x] = True
        minima.add(min(orbit))
    return minima


def _check_symmetry(plane: IncidencePlane, perms: Sequence[Sequence[int]]):
    """Symmetry prunes are only sound for collineations; verify each one."""
    line_set = set(plane.lines)
    for perm in perms:
        if sorted(perm) != list(range(plane.num_points)):
            raise ValueError("symmetry entry is not a permutation of the points")
        for pts in plane.lines:
            if tuple(sorted(perm[i] for i in pts)) not in line_set:
                raise ValueError("symmetry permutation does not preserve lines")


class _Searcher:
    def __init__(self, plane, t, m, b, first_points):
        self.plane = plane
        self.t = t
        self.m = m
        self.b = b
        self.first_points = first_points
        self.num_points = plane.num_points
        self.num_lines = plane.num_lines
        # suffix[j][i]: points of line j with index >= i, for the dead-line prune
        self.suffix = []
        for pts in plane.lines:
            on_line = set(pts)
            col = [0] * (self.num_points + 1)
            for i in range(self.num_points - 1, -1, -1):
                col[i] = col[i + 1] + (1 if i in on_line else 0)
            self.suffix.append(col)

    def run_subtree(self, prefix, budget):
        """Search the subtree fixed by include/exclude decisions on points
        0..len(prefix)-1; returns (found sets, nodes used, complete)."""
        plane, t, m, b = self.plane, self.t, self.m, self.b
        pt_lines = plane.point_lines
        suffix = self.suffix
        counts = [0] * self.num_lines
        found = []
        state = {"nodes": 0}

        def include_ok(i, size):
            if size == 0 and self.first_points is not None and i not in self.first_points:
                return False
            return all(counts[j] <= b for j in pt_lines[i])

        def exclude_ok(i):
            nxt = i + 1
            return all(counts[j] + suffix[j][nxt] >= t for j in pt_lines[i])

        def step(i, size, mask):
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise _BudgetExceeded
            if size == m:
                if all(c >= t for c in counts):
                    ps = _validate_extremal(plane, mask, t, b)
                    if ps is not None:
                        found.append(ps)
                return
            if i == self.num_points or size + (self.num_points - i) < m:
                return
            if include_ok(i, size):
                for j in pt_lines[i]:
                    counts[j] += 1
                step(i + 1, size + 1, mask | (1 << i))
                for j in pt_lines[i]:
                    counts[j] -= 1
            if exclude_ok(i):
                step(i + 1, size, mask)

        # Replay the prefix decisions with the same feasibility checks.
        size, mask = 0, 0
        for i, take in enumerate(prefix):
            if take:
                if not include_ok(i, size):
                    return [], 0, True
                for j in pt_lines[i]:
                    counts[j] += 1
                size += 1
                mask |= 1 << i
            else:
                if not exclude_ok(i):
                    return [], 0, True

        try:
            step(len(prefix), size, mask)
        except _BudgetExceeded:
            return found, state["nodes"], False
        return found, state["nodes"], True


def exhaustive_extremal_search(task: SearchTask) -> SearchResult:
    """Run one search task to exhaustion (or until the node budget runs out).

    The returned set list is sorted lexicographically by point indices and is
    identical for any worker count.
    """
    start = time.perf_counter()
    plane, t = task.plane, task.t
    if task.node_budget < 1:
        raise ValueError("node budget must be positive")
    bv = max_size_bound(plane.order, t)
    if not bv.attainable or (task.size is not None and task.size != bv.bound):
        return SearchResult([], 0, time.perf_counter() - start, True)
    m, b = bv.bound, bv.b

    first_points = None
    if task.symmetry:
        _check_symmetry(plane, task.symmetry)
        first_points = _orbit_minima(plane.num_points, task.symmetry)

    if not task.pruning:
        sets, nodes, complete = _brute_force(plane, t, m, b, task.node_budget, first_points)
    else:
        searcher = _Searcher(plane, t, m, b, first_points)
        if plane.num_points >= _SPLIT_MIN_POINTS:
            prefixes = list(itertools.product((True, False), repeat=_SPLIT_DEPTH))
        else:
            prefixes = [()]
        budget_each = max(1, task.node_budget // len(prefixes))
        if task.workers > 1 and len(prefixes) > 1:
            with ThreadPoolExecutor(max_workers=task.workers) as pool:
                outcomes = list(
                    pool.map(lambda pre: searcher.run_subtree(pre, budget_each), prefixes)
                )
        else:
            outcomes = [searcher.run_subtree(pre, budget_each) for pre in prefixes]
        sets = [ps for out in outcomes for ps in out[0]]
        nodes = sum(out[1] for out in outcomes)
        complete = all(out[2] for out in outcomes)

    sets.sort(key=lambda ps: ps.indices())
    return SearchResult(sets, nodes, time.perf_counter() - start, complete)


def _brute_force(plane, t, m, b, budget, first_points):
    """Unpruned oracle: filter every size-m subset through the verifier."""
    found = []
    nodes = 0
    for combo in itertools.combinations(range(plane.num_points), m):
        nodes += 1
        if nodes > budget:
            return found, nodes, False
        if first_points is not None and combo[0] not in first_points:
            continue
        mask = 0
        for i in combo:
            mask |= 1 << i
        ps = _validate_extremal(plane, mask, t, b)
        if ps is not None:
            found.append(ps)
    return found, nodes, True


@dataclass
class CertifyEntry:
    """Search outcome for one multiplicity t."""

    t: int
    attainable: bool
    size: int | None
    found: int
    families: dict[str, int]
    complete: bool
    expected_family: str | None
    sets: list[PointSet] = field(default_factory=list, repr=False)

    def as_dict(self):
        return {
            "t": self.t,
            "attainable": self.attainable,
            "size": self.size,
            "found": self.found,
            "complete": self.complete,
            "families": dict(sorted(self.families.items())),
            "expected_family": self.expected_family,
        }


@dataclass
class CertifyReport:
    """Desk-scale certification: extremal sets exist exactly where predicted."""

    order: int
    entries: list[CertifyEntry]
    expected: dict[int, FamilyLabel] | None
    matches_theory: bool | None

    def as_dict(self):
        return {
            "order": self.order,
            "expected_t": sorted(self.expected) if self.expected is not None else None,
            "results": [e.as_dict() for e in self.entries],
            "matches_theory": self.matches_theory,
        }


def certify_no_other_t(
    plane: IncidencePlane,
    t_values: Sequence[int] | None = None,
    workers: int = 1,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CertifyReport:
    """Search every t in range and compare against the closed-form classifier.

    Unattainable bounds short-circuit without searching.  matches_theory is
    True only when every search ran to exhaustion, sets were found exactly at
    the predicted t values, and every found set carries its predicted family
    label.  For planes of non-prime-power order there is no prediction and
    matches_theory is None.
    """
    n = plane.order
    if t_values is None:
        t_values = range(1, n + 1)
    try:
        expected: dict[int, FamilyLabel] | None = {
            e.t: e.family for e in classify_prime_power(n)
        }
    except ValueError:
        expected = None

    entries = []
    for t in t_values:
        bv = max_size_bound(n, t)
        if not bv.attainable:
            entries.append(CertifyEntry(t, False, None, 0, {}, True, _expected_name(expected, t)))
            continue
        res = exhaustive_extremal_search(
            SearchTask(plane, t, workers=workers, node_budget=node_budget)
        )
        fams = Counter(characterize(plane, ps, t).value for ps in res.sets)
        entries.append(
            CertifyEntry(
                t,
                True,
                bv.bound,
                len(res.sets),
                dict(fams),
                res.complete,
                _expected_name(expected, t),
                sets=res.sets,
            )
        )

    if expected is None:
        matches = None
    else:
        matches = all(e.complete for e in entries)
        found_t = {e.t for e in entries if e.found}
        predicted_t = {t for t in expected if t in set(t_values)}
        matches = matches and found_t == predicted_t
        for e in entries:
            if e.found and matches:
                matches = e.families == {expected[e.t].value: e.found}
    return CertifyReport(n, entries, expected, matches)


def _expected_name(expected, t):
    if expected is None or t not in expected:
        return None
    return expected[t].value
