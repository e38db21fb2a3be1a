"""
Outdegree, left-right component and block statistics, and their
equidistribution over 2-Stirling permutations, ternary increasing trees
and plane-oriented recursive trees.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .bijections import perm_to_tree
from .enumeration import enum_kary_trees, enum_ports, enum_stirling

KINDS = ("outdeg", "lr", "block")


@dataclass(frozen=True)
class StatProfile:
    """
    Number of parts of each size j of one object: nodes of outdegree j,
    left-right components of j nodes, or decompositions into j blocks.
    """

    kind: str
    n: int
    counts: Tuple[Tuple[int, int], ...]
    auxiliary: Optional[int] = None

    @classmethod
    def from_counter(cls, kind, n, counter, auxiliary=None):
        counts = tuple(sorted((j, c) for j, c in counter.items() if c))
        return cls(kind, n, counts, auxiliary)

    def __getitem__(self, j):
        return dict(self.counts).get(j, 0)

    def as_dict(self):
        return dict(self.counts)


def outdegree_profile(tree):
    return StatProfile.from_counter(
        "outdeg", tree.size, Counter(len(kids) for kids in tree.children)
    )


def _require_ternary(k):
    if k != 2:
        raise ValueError(f"this statistic is defined for k=2, got k={k}")


def lr_profile(tree):
    """
    Sizes of the components left after deleting every center edge of a
    ternary increasing tree. The auxiliary count is the number of nodes
    whose only child is a leaf in the center slot.
    """
    _require_ternary(tree.k)
    sizes = Counter()
    roots = [1] if tree.size else []
    while roots:
        size = 0
        stack = [roots.pop()]
        while stack:
            node = stack.pop()
            size += 1
            left, center, right = tree.slots[node - 1]
            stack.extend(c for c in (left, right) if c is not None)
            if center is not None:
                roots.append(center)
        sizes[size] += 1
    auxiliary = sum(
        1
        for left, center, right in tree.slots
        if left is None
        and right is None
        and center is not None
        and tree.slots[center - 1] == (None, None, None)
    )
    return StatProfile.from_counter("lr", tree.size, sizes, auxiliary)


def _relabel(word):
    ranks = {letter: rank for rank, letter in enumerate(sorted(set(word)), 1)}
    return tuple(ranks[letter] for letter in word)


def block_profile(sigma):
    """
    Split a 2-Stirling permutation into blocks, each running from the first
    to the last copy of its first letter, and recurse into the interior of
    every block after relabeling it to 1..m. Empty interiors are dropped.
    """
    _require_ternary(sigma.k)
    blocks = Counter()
    words = [sigma.word] if sigma.word else []
    while words:
        word = words.pop()
        last = {letter: p for p, letter in enumerate(word)}
        count, p = 0, 0
        while p < len(word):
            q = last[word[p]]
            if q > p + 1:
                words.append(_relabel(word[p + 1 : q]))
            count += 1
            p = q + 1
        blocks[count] += 1
    return StatProfile.from_counter("block", sigma.n, blocks)


@dataclass(frozen=True)
class Mismatch:
    j: int
    value: int
    counts: Dict[str, int]


@dataclass(frozen=True)
class EquidistributionReport:
    n: int
    j_min: int
    checked: Tuple[int, ...]
    objects: Dict[str, int]
    mismatch: Optional[Mismatch]
    auxiliary_agrees: bool
    pointwise_agreement: int
    distributions: Dict[int, Dict[str, Counter]] = field(repr=False)

    @property
    def passed(self):
        return self.mismatch is None

    def __bool__(self):
        return self.passed

    def to_frame(self, columns=None, header=None):
        """Per-class value distributions as a DataFrame (needs pandas)."""
        from ._table import _distribution_frame

        return _distribution_frame(self.distributions, columns, header)


def equidistribution_report(n, j_min=3):
    """
    Compare, for every j from ``j_min`` to ``n``, the number of blocks of
    2-Stirling permutations of size n, the number of left-right components
    of size j of ternary trees with n nodes and the number of nodes of
    outdegree j of plane-oriented trees with n+1 nodes.

    The comparison of outdegree 2 with the auxiliary count of ternary trees,
    and the pointwise agreement of the block and left-right profiles under
    :func:`perm_to_tree`, are reported without affecting the verdict.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    perms = list(enum_stirling(n, 2))
    profiles = {
        "block": [block_profile(sigma) for sigma in perms],
        "lr": [lr_profile(tree) for tree in enum_kary_trees(n, 2)],
        "outdeg": [outdegree_profile(tree) for tree in enum_ports(n + 1)],
    }
    checked = tuple(range(j_min, n + 1))
    distributions = {}
    mismatch = None
    for j in checked:
        dist = {
            name: Counter(profile[j] for profile in values)
            for name, values in profiles.items()
        }
        distributions[j] = dist
        agree = dist["block"] == dist["lr"] == dist["outdeg"]
        if mismatch is None and not agree:
            seen = set().union(*dist.values())
            value = min(
                v for v in seen if len({d[v] for d in dist.values()}) > 1
            )
            mismatch = Mismatch(
                j, value, {name: d[value] for name, d in dist.items()}
            )
    auxiliary = Counter(p.auxiliary for p in profiles["lr"])
    outdegree_two = Counter(p[2] for p in profiles["outdeg"])
    pointwise = sum(
        block.counts == lr_profile(perm_to_tree(sigma)).counts
        for sigma, block in zip(perms, profiles["block"])
    )
    return EquidistributionReport(
        n=n,
        j_min=j_min,
        checked=checked,
        objects={name: len(values) for name, values in profiles.items()},
        mismatch=mismatch,
        auxiliary_agrees=auxiliary == outdegree_two,
        pointwise_agreement=pointwise,
        distributions=distributions,
    )
