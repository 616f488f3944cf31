"""Leaf profiles of binary trees: validity, internal profiles, counting, truncation.

The profile of a binary tree of height h is the sequence (l_0, ..., l_h) in
which l_i counts the leaves at depth i. Such a sequence of nonnegative
integers with l_h > 0 is realized by at least one binary tree exactly when
its Kraft sum

    sum_{i=0}^{h} l_i / 2^i  =  1

holds with equality (the Kraft-McMillan condition for complete prefix codes).
A valid profile forces the number i_k of internal nodes at each depth k:
top-down, i_0 = 1 and i_k = 2*i_{k-1} - l_k; bottom-up, i_{h-1} = l_h / 2 and
i_k = (i_{k+1} + l_{k+1}) / 2. Both directions are computed here and must
agree, which gives a division-free integrality certificate of validity.

The number of binary trees realizing a valid profile is the product

    prod_{k=0}^{h-1} binom(2*i_k, l_{k+1}),

one independent choice per level: the l_{k+1} leaves at depth k+1 pick their
positions among the 2*i_k children slots of the depth-k internal nodes.

All rational arithmetic is exact (fractions.Fraction); counts are exact big
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class Profile:
    """Per-level leaf counts (l_0, ..., l_h) of a binary tree, l_h > 0.

    Structural constraints are enforced on construction: entries are
    nonnegative integers, the last entry is positive (so the height h is
    well defined and trailing zeros are rejected rather than normalized),
    a profile of height 0 is exactly (1), and a profile of height >= 1 has
    l_0 = 0 since a tree with internal nodes has no leaf at the root.

    Kraft validity is deliberately not enforced here: invalid profiles are
    legal values (they simply count zero trees) and several operations
    report on them.
    """

    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("empty profile")
        if any((not isinstance(x, int)) or x < 0 for x in self.levels):
            raise ValueError("profile entries must be nonnegative integers")
        if self.levels[-1] == 0:
            raise ValueError("trailing zero: the last profile entry l_h must be positive")
        if len(self.levels) == 1 and self.levels != (1,):
            raise ValueError("a height-0 profile must be (1)")
        if len(self.levels) > 1 and self.levels[0] != 0:
            raise ValueError("a profile of positive height must start with l_0 = 0")

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    @property
    def total_leaves(self) -> int:
        return sum(self.levels)

    @classmethod
    def parse(cls, text: str) -> "Profile":
        """Parse a comma-separated profile such as "0,0,2,4"."""
        try:
            levels = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse profile {text!r}: entries must be integers")
        return cls(levels)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.levels)


@dataclass(frozen=True)
class InternalProfile:
    """Per-level internal-node counts (i_0, ..., i_{h-1}); i_0 = 1."""

    levels: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.levels)


def kraft_sum(p: Profile) -> Fraction:
    """Exact Kraft sum sum_i l_i / 2^i of a profile."""
    return sum((Fraction(l, 1 << i) for i, l in enumerate(p.levels)), Fraction(0))


def is_valid(p: Profile) -> bool:
    """True iff the profile is realized by some binary tree (Kraft sum = 1)."""
    return kraft_sum(p) == 1


def internal_profile(p: Profile) -> InternalProfile:
    """Internal-node counts forced by a valid profile of height >= 1.

    Computed bottom-up (i_{h-1} = l_h / 2, then i_k = (i_{k+1} + l_{k+1}) / 2)
    and cross-checked top-down (i_0 = 1, i_k = 2*i_{k-1} - l_k). On a valid
    profile the two directions agree and every entry is a positive integer.

    Raises ValueError "parity violation" when a bottom-up halving step is not
    integral, and "kraft violation" when the steps are integral but the
    profile is still invalid (the bottom-up pass then ends at i_0 != 1).
    Either error implies the profile is invalid.
    """
    h = p.height
    if h < 1:
        raise ValueError("a height-0 profile has no internal levels")
    l = p.levels
    internals = [0] * h
    carry = l[h]
    # carry holds i_{k+1} + l_{k+1} while walking k = h-1 down to 0.
    for k in range(h - 1, -1, -1):
        if carry % 2 != 0:
            raise ValueError(f"parity violation at level {k}: i_{k} = {carry}/2 is not integral")
        internals[k] = carry // 2
        carry = internals[k] + l[k]
    if internals[0] != 1:
        raise ValueError(f"kraft violation: bottom-up pass gives i_0 = {internals[0]}, kraft sum {kraft_sum(p)}")
    # Top-down direction, re-derived independently.
    top_down = [1]
    for k in range(1, h):
        top_down.append(2 * top_down[k - 1] - l[k])
    if top_down != internals:
        # Unreachable for any profile that passed the bottom-up checks; kept
        # as a guard because both recurrences are part of the contract.
        raise ValueError("kraft violation: top-down and bottom-up internal profiles disagree")
    return InternalProfile(tuple(internals))


def count_trees(p: Profile) -> int:
    """Exact number of binary trees with profile p (>= 1 for valid profiles)."""
    s = kraft_sum(p)
    if s != 1:
        raise ValueError(f"invalid profile, kraft sum {s} != 1")
    if p.height == 0:
        return 1
    internals = internal_profile(p).levels
    result = 1
    for k in range(p.height):
        result *= comb(2 * internals[k], p.levels[k + 1])
    return result


def truncate_profile(p: Profile, k: int) -> Profile:
    """Cut a valid profile at level k, absorbing everything below.

    The result (l_0, ..., l_k, i_{k+1} + l_{k+1}) replaces each depth-(k+1)
    subtree root slot by a leaf, so it is again a valid profile, of height
    exactly k + 1. For k = h-1 the profile is returned unchanged (i_h = 0).
    """
    h = p.height
    if not 0 <= k <= h - 1:
        raise ValueError(f"level {k} out of range: need 0 <= k <= {h - 1}")
    internals = internal_profile(p).levels
    below = internals[k + 1] if k + 1 < h else 0
    return Profile(p.levels[: k + 1] + (below + p.levels[k + 1],))
