"""Exact 0-1 solver for budgeted coverage selection.

The program: choose items (tweet-paths or tweets) x_i and content words y_j
to maximize  sum_i gain_i * x_i  +  sum_j w_j * y_j  subject to

    sum_i x_i * length_i <= budget            (word budget)
    y_j = 1  =>  some selected item covers j  (no phantom words)
    x_i = 1  =>  every word of item i is selected

Because every w_j is positive, the optimal y is fully determined by x: y_j
is 1 exactly when some selected item covers j. The solver therefore branches
on x only and derives y, which halves the search space while preserving the
objective.

Search is depth-first branch and bound: items ordered by descending
(gain + covered weight) / length, upper bound = fractional knapsack
relaxation on gains plus the weight of still-reachable uncovered words, and
a lazy greedy warm start seeding the incumbent. The default node budget is
a deterministic function of instance size, so identical instances always
produce identical solutions; the wall-clock limit is a backstop.
"""

from __future__ import annotations

import heapq
import json
import time
from dataclasses import dataclass
from math import fsum

import numpy as np

DEFAULT_TIME_LIMIT = 10.0
# Rough per-node work is O(n + m); the node budget scales inversely so that
# solves stay fast and, more importantly, cut off deterministically.
DEFAULT_NODE_OPS = 5_000_000
MAX_NODES = 2_000_000


@dataclass(frozen=True)
class IlpInstance:
    lengths: tuple[int, ...]
    gains: tuple[float, ...]
    coverage: tuple[tuple[int, ...], ...]  # C_i: sorted word indices per item
    num_words: int
    budget: int
    word_weights: tuple[float, ...] | None = None  # None = unit weights

    def __post_init__(self):
        n = len(self.lengths)
        if not (len(self.gains) == len(self.coverage) == n):
            raise ValueError("lengths, gains, and coverage must align")
        if self.budget < 0:
            raise ValueError("budget must be >= 0")
        if any(l < 1 for l in self.lengths):
            raise ValueError("every length must be >= 1")
        if any(not np.isfinite(g) or g < 0 for g in self.gains):
            raise ValueError("gains must be finite and >= 0")
        for i, cov in enumerate(self.coverage):
            if list(cov) != sorted(set(cov)):
                raise ValueError(f"coverage of item {i} must be sorted and duplicate-free")
            if cov and (cov[0] < 0 or cov[-1] >= self.num_words):
                raise ValueError(f"coverage of item {i} has out-of-range word indices")
        if self.word_weights is not None:
            if len(self.word_weights) != self.num_words:
                raise ValueError("word_weights must have one entry per word")
            if any(not np.isfinite(w) or w <= 0 for w in self.word_weights):
                raise ValueError("word weights must be finite and > 0")

    @property
    def n_items(self) -> int:
        return len(self.lengths)

    def weights_array(self) -> np.ndarray:
        if self.word_weights is None:
            return np.ones(self.num_words)
        return np.asarray(self.word_weights, dtype=float)

    def items_covering(self) -> list[list[int]]:
        """T_j: items containing word j (the dual of coverage)."""
        T: list[list[int]] = [[] for _ in range(self.num_words)]
        for i, cov in enumerate(self.coverage):
            for j in cov:
                T[j].append(i)
        return T


@dataclass(frozen=True)
class IlpSolution:
    selected: tuple[int, ...]      # item indices, ascending
    covered: frozenset[int]        # word indices with y_j = 1
    objective: float
    optimal: bool
    nodes: int = 0
    elapsed: float = 0.0


def objective_value(instance: IlpInstance, selected, covered) -> float:
    """Canonical objective: summation order is fixed so equal selections
    always produce bit-identical floats."""
    gain = fsum(instance.gains[i] for i in sorted(selected))
    if instance.word_weights is None:
        return gain + float(len(covered))
    return gain + fsum(instance.word_weights[j] for j in sorted(covered))


def derive_covered(instance: IlpInstance, selected) -> frozenset[int]:
    covered: set[int] = set()
    for i in selected:
        covered.update(instance.coverage[i])
    return frozenset(covered)


def check_solution(instance: IlpInstance, solution: IlpSolution) -> list[str]:
    """Violations of the budget / no-phantom-word / forced-word constraints."""
    problems = []
    used = sum(instance.lengths[i] for i in solution.selected)
    if used > instance.budget:
        problems.append(f"budget violated: {used} > {instance.budget}")
    reachable = derive_covered(instance, solution.selected)
    for j in solution.covered:
        if j not in reachable:
            problems.append(f"word {j} selected but no selected item covers it")
    for i in solution.selected:
        for j in instance.coverage[i]:
            if j not in solution.covered:
                problems.append(f"item {i} selected but its word {j} is not")
    expected = objective_value(instance, solution.selected, solution.covered)
    if abs(expected - solution.objective) > 1e-9:
        problems.append(f"objective mismatch: {solution.objective} != {expected}")
    return problems


def greedy_solution(instance: IlpInstance) -> IlpSolution:
    """Density-greedy warm start (lazy evaluation of marginal coverage)."""
    w = instance.weights_array()
    covered: set[int] = set()
    cap = instance.budget
    selected: list[int] = []

    def density(i: int) -> float:
        marginal = instance.gains[i] + sum(w[j] for j in instance.coverage[i] if j not in covered)
        return marginal / instance.lengths[i]

    heap = [(-density(i), i) for i in range(instance.n_items) if instance.lengths[i] <= cap]
    heapq.heapify(heap)
    while heap:
        _, i = heapq.heappop(heap)
        if instance.lengths[i] > cap:
            continue
        d = density(i)
        if heap and d < -heap[0][0] - 1e-15:
            # stale entry: re-insert with the refreshed marginal
            heapq.heappush(heap, (-d, i))
            continue
        if d <= 0:
            break
        selected.append(i)
        covered.update(instance.coverage[i])
        cap -= instance.lengths[i]
    selected.sort()
    cov = derive_covered(instance, selected)
    return IlpSolution(
        selected=tuple(selected),
        covered=cov,
        objective=objective_value(instance, selected, cov),
        optimal=False,
    )


def solve(
    instance: IlpInstance,
    time_limit: float = DEFAULT_TIME_LIMIT,
    node_budget: int | None = None,
) -> IlpSolution:
    """Branch-and-bound maximization; certified optimal unless cut off.

    The returned solution always satisfies all three constraint families.
    ``optimal`` is True only when the search space was exhausted (including
    by sound pruning) within the node and time budgets.
    """
    t0 = time.perf_counter()
    n = instance.n_items
    if n == 0 or instance.budget == 0:
        return IlpSolution((), frozenset(), 0.0, True, 0, time.perf_counter() - t0)
    if node_budget is None:
        node_budget = min(
            MAX_NODES,
            max(4096, DEFAULT_NODE_OPS // (n + instance.num_words + 1)),
        )

    w = instance.weights_array()
    wsum = [sum(w[j] for j in cov) for cov in instance.coverage]
    order = sorted(
        range(n),
        key=lambda i: (-(instance.gains[i] + wsum[i]) / instance.lengths[i], i),
    )
    len_o = np.array([instance.lengths[i] for i in order])
    gain_o = np.array([instance.gains[i] for i in order])
    cov_o = [np.array(instance.coverage[i], dtype=np.intp) for i in order]

    last_pos = np.full(instance.num_words, -1, dtype=np.intp)
    for pos in range(n):
        last_pos[cov_o[pos]] = np.maximum(last_pos[cov_o[pos]], pos)

    # knapsack relaxation order: by gain density, positions ascending on ties
    knap_order = sorted(range(n), key=lambda p: (-gain_o[p] / len_o[p], p))

    def knap_bound(pos: int, cap: int) -> float:
        acc = 0.0
        for p in knap_order:
            if p < pos or cap <= 0:
                if cap <= 0:
                    break
                continue
            ln = int(len_o[p])
            if ln <= cap:
                acc += gain_o[p]
                cap -= ln
            else:
                acc += gain_o[p] * cap / ln
                break
        return acc

    incumbent = greedy_solution(instance)
    best_obj = incumbent.objective
    best_selected = incumbent.selected

    cover_count = np.zeros(instance.num_words, dtype=np.intp)
    covered_weight = 0.0
    chosen: list[int] = []  # branch positions currently included

    def include(pos: int):
        nonlocal covered_weight
        cov = cov_o[pos]
        fresh = cov[cover_count[cov] == 0]
        covered_weight += float(w[fresh].sum())
        cover_count[cov] += 1
        chosen.append(pos)

    def undo(pos: int):
        nonlocal covered_weight
        cov = cov_o[pos]
        cover_count[cov] -= 1
        gone = cov[cover_count[cov] == 0]
        covered_weight -= float(w[gone].sum())
        chosen.pop()

    nodes = 0
    complete = True
    # stack holds ("visit", pos, cap, gain) and ("undo", pos) actions
    stack: list[tuple] = [("visit", 0, instance.budget, 0.0)]
    while stack:
        action = stack.pop()
        if action[0] == "undo":
            undo(action[1])
            continue
        _, pos, cap, gain = action
        nodes += 1
        if nodes > node_budget:
            complete = False
            break
        if nodes % 256 == 0 and time.perf_counter() - t0 > time_limit:
            complete = False
            break

        current = gain + covered_weight
        if current > best_obj - 1e-9:
            sel = tuple(sorted(order[p] for p in chosen))
            cov = derive_covered(instance, sel)
            obj = objective_value(instance, sel, cov)
            if obj > best_obj:
                best_obj = obj
                best_selected = sel

        # fast-forward past items that no longer fit (their exclusion is forced)
        while pos < n and len_o[pos] > cap:
            pos += 1
        if pos == n:
            continue

        reach = float(w[(last_pos >= pos) & (cover_count == 0)].sum())
        upper = gain + covered_weight + reach + knap_bound(pos, cap)
        # 1e-9 slack guards against float drift in the incremental weights
        if upper <= best_obj - 1e-9:
            continue

        stack.append(("visit", pos + 1, cap, gain))  # exclude branch (popped last)
        stack.append(("undo", pos))
        include(pos)
        stack.append(("visit", pos + 1, cap - int(len_o[pos]), gain + float(gain_o[pos])))

    covered = derive_covered(instance, best_selected)
    return IlpSolution(
        selected=best_selected,
        covered=covered,
        objective=objective_value(instance, best_selected, covered),
        optimal=complete,
        nodes=nodes,
        elapsed=time.perf_counter() - t0,
    )


ORACLE_MAX_ITEMS = 20


def oracle_solve(instance: IlpInstance) -> IlpSolution:
    """Exhaustive enumeration of all item subsets. Verification only."""
    n = instance.n_items
    if n > ORACLE_MAX_ITEMS:
        raise ValueError(f"oracle refuses instances with more than {ORACLE_MAX_ITEMS} items")

    best_obj = 0.0
    best_sel: tuple[int, ...] = ()
    selected: list[int] = []

    def recurse(i: int, cap: int):
        nonlocal best_obj, best_sel
        if i == n:
            cov = derive_covered(instance, selected)
            obj = objective_value(instance, selected, cov)
            if obj > best_obj:
                best_obj = obj
                best_sel = tuple(selected)
            return
        if instance.lengths[i] <= cap:
            selected.append(i)
            recurse(i + 1, cap - instance.lengths[i])
            selected.pop()
        recurse(i + 1, cap)

    recurse(0, instance.budget)
    covered = derive_covered(instance, best_sel)
    return IlpSolution(
        selected=best_sel,
        covered=covered,
        objective=objective_value(instance, best_sel, covered),
        optimal=True,
    )


def dump_instance(instance: IlpInstance, path) -> None:
    obj = {
        "lengths": list(instance.lengths),
        "gains": list(instance.gains),
        "coverage": [list(c) for c in instance.coverage],
        "num_words": instance.num_words,
        "budget": instance.budget,
        "word_weights": list(instance.word_weights) if instance.word_weights else None,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, sort_keys=True)
        fh.write("\n")


def load_instance(path) -> IlpInstance:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    return IlpInstance(
        lengths=tuple(obj["lengths"]),
        gains=tuple(obj["gains"]),
        coverage=tuple(tuple(c) for c in obj["coverage"]),
        num_words=obj["num_words"],
        budget=obj["budget"],
        word_weights=tuple(obj["word_weights"]) if obj.get("word_weights") else None,
    )
