"""Brute-force enumerators: independent ground truth for the fast paths.

Everything here counts by exhaustive construction and never consults the
recurrence- or formula-based modules, so agreement between the two routes is
evidence, not circularity. Hard size guards (at most 12 leaves, at most 5
growth steps) keep every enumeration at desk scale; the oracle is a test
fixture, not a feature.

The growth-history walk yields every distinct reachable state: an active
tree is yielded at each step it survives, an inactive one exactly once, at
the step its last anchors die. Bucketing the yielded active states by
(internal nodes, anchors, height) therefore reproduces the height-indexed
counts, and columns whose histories all resolve within the step bound are
completed to Catalan numbers by the inactive states.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .profiles import Profile
from .tree_core import (
    BinaryNode,
    BinaryTree,
    GrowingTree,
    GrowthChoice,
    TreeStats,
    grow_step,
    new_seed,
    profile,
)

MAX_ORACLE_LEAVES = 12
MAX_ORACLE_STEPS = 5

# Nested-pair shape cache shared across calls: None is a leaf, (l, r) an
# internal node. Shapes are immutable and safely shared between trees.
_shape_cache: dict[int, list] = {1: [None]}


def _shapes(n_leaves: int) -> list:
    if n_leaves not in _shape_cache:
        out = []
        for i in range(1, n_leaves):
            for left in _shapes(i):
                for right in _shapes(n_leaves - i):
                    out.append((left, right))
        _shape_cache[n_leaves] = out
    return _shape_cache[n_leaves]


def _tree_of_shape(shape) -> BinaryTree:
    nodes: list[BinaryNode] = []

    def build(s) -> int:
        if s is None:
            nodes.append(BinaryNode(leaf=True))
        else:
            left = build(s[0])
            right = build(s[1])
            nodes.append(BinaryNode(leaf=False, left=left, right=right))
        return len(nodes) - 1

    root = build(shape)
    return BinaryTree(nodes=tuple(nodes), root=root)


def all_binary_trees(n_leaves: int) -> list[BinaryTree]:
    """Every plane binary tree with the given number of leaves, no duplicates.

    Enumerated by root split in increasing left-size order; the result has
    Catalan(n_leaves - 1) trees and the order is stable across calls.
    """
    if not 1 <= n_leaves <= MAX_ORACLE_LEAVES:
        raise ValueError(f"n_leaves out of range 1..{MAX_ORACLE_LEAVES}: {n_leaves}")
    return [_tree_of_shape(s) for s in _shapes(n_leaves)]


def trees_with_profile(p: Profile) -> list[BinaryTree]:
    """Every binary tree whose leaf profile equals p; empty for invalid p."""
    leaves = p.total_leaves
    if leaves > MAX_ORACLE_LEAVES:
        raise ValueError(f"profile has {leaves} leaves, oracle bound is {MAX_ORACLE_LEAVES}")
    return [t for t in all_binary_trees(leaves) if profile(t) == p]


_CHOICE_PAIR = (GrowthChoice.DIE, GrowthChoice.BRANCH)


def all_growth_histories(h_steps: int) -> Iterator[tuple[GrowingTree, TreeStats]]:
    """Every state reachable from the seed within h_steps growth steps.

    Counts in the yielded stats are maintained incrementally (branching b of
    the m anchors adds b internal nodes, leaves 2b anchors, and kills m - b);
    the height is the step for active states and step - 1 for a tree whose
    anchors all just died.
    """
    if not 1 <= h_steps <= MAX_ORACLE_STEPS:
        raise ValueError(f"h_steps out of range 1..{MAX_ORACLE_STEPS}: {h_steps}")
    return _expand(new_seed(), 0, 0, h_steps)


def _expand(t: GrowingTree, n: int, ell: int, h_steps: int) -> Iterator[tuple[GrowingTree, TreeStats]]:
    m = t.anchor_count
    for choices in itertools.product(_CHOICE_PAIR, repeat=m):
        child = grow_step(t, choices)
        branched = sum(1 for c in choices if c is GrowthChoice.BRANCH)
        child_n = n + branched
        child_m = 2 * branched
        child_ell = ell + (m - branched)
        height = child.step if child_m else child.step - 1
        yield child, TreeStats(n=child_n, m=child_m, ell=child_ell, h=height)
        if child_m and child.step < h_steps:
            yield from _expand(child, child_n, child_ell, h_steps)


CHI2_FALSE_ALARM = 1e-6


@dataclass(frozen=True)
class ChiSquareResult:
    """Pearson statistic against the uniform null, with its pass threshold."""

    statistic: float
    threshold: float
    dof: int
    passed: bool


def chi_square(observed: Sequence[int]) -> ChiSquareResult:
    """Test observed outcome counts against the uniform distribution.

    Passes when the Pearson statistic stays below the 1 - 1e-6 quantile of
    the chi-square law with len(observed) - 1 degrees of freedom, a roughly
    5-sigma false-alarm rate chosen so that repeated CI runs do not flake.
    Requires at least 100 draws per outcome.
    """
    counts = list(observed)
    n_outcomes = len(counts)
    if n_outcomes < 2:
        raise ValueError("need at least 2 outcomes")
    total = sum(counts)
    if total < 100 * n_outcomes:
        raise ValueError(f"insufficient draws: {total} < 100 * {n_outcomes}")
    mean = total / n_outcomes
    statistic = sum((c - mean) ** 2 for c in counts) / mean
    from scipy.stats import chi2

    threshold = float(chi2.ppf(1 - CHI2_FALSE_ALARM, n_outcomes - 1))
    return ChiSquareResult(
        statistic=statistic,
        threshold=threshold,
        dof=n_outcomes - 1,
        passed=statistic < threshold,
    )


@dataclass(frozen=True)
class OracleReport:
    """One expected-versus-actual comparison, serializable as a JSON line."""

    checked: str
    expected: object
    actual: object
    passed: bool

    @classmethod
    def compare(cls, checked: str, expected: object, actual: object) -> "OracleReport":
        return cls(checked=checked, expected=expected, actual=actual, passed=expected == actual)

    def to_json(self) -> str:
        return json.dumps(
            {
                "checked": self.checked,
                "expected": _jsonable(self.expected),
                "actual": _jsonable(self.actual),
                "pass": self.passed,
            },
            separators=(",", ":"),
        )


def _jsonable(value: object) -> object:
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, dict):
        return [[_jsonable(k), _jsonable(v)] for k, v in sorted(value.items())]
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return value
