"""
Local types of k-Stirling permutations and node types of (k+1)-ary trees.
"""
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict

from .core import KaryIncreasingTree, KStirlingPermutation, LocalTypeString

_BORDER = -math.inf

CLASSIC_NAMES = {
    "00": "peak",
    "11": "valley",
    "01": "double rise",
    "10": "double fall",
}

CLASSIC_NODE_NAMES = {
    "00": "leaf",
    "11": "double node",
    "01": "right-branching node",
    "10": "left-branching node",
}

TERNARY_NODE_NAMES = {
    "111": "triple node",
    "110": "(left,center)-branching node",
    "101": "(left,right)-branching node",
    "011": "(center,right)-branching node",
    "100": "left-branching node",
    "010": "center-branching node",
    "001": "right-branching node",
    "000": "leaf",
}


def local_types(sigma):
    """
    Local types L_1, ..., L_n of a k-Stirling permutation.

    Bit 1 of L_i is 0 iff the letter left of the first copy of i is
    smaller, bit k+1 is 0 iff the letter right of the last copy is
    smaller, and bit h in between is 0 iff copies h-1 and h of i are
    adjacent. The word is bordered by a sentinel smaller than any letter.
    """
    word, k = sigma.word, sigma.k

    def at(position):
        if 1 <= position <= len(word):
            return word[position - 1]
        return _BORDER

    positions = {}
    for position, letter in enumerate(word, 1):
        positions.setdefault(letter, []).append(position)

    types = []
    for letter in range(1, sigma.n + 1):
        occ = positions[letter]
        bits = [int(at(occ[0] - 1) > letter)]
        bits.extend(int(at(occ[h] - 1) != letter) for h in range(1, k))
        bits.append(int(at(occ[-1] + 1) > letter))
        types.append(LocalTypeString(tuple(bits)))
    return tuple(types)


def local_types_of_word(word, k):
    """Like :func:`local_types` for a raw word; invalid words raise."""
    return local_types(KStirlingPermutation(word, k))


def node_types(tree):
    """G_i has bit h set iff slot h of node i is occupied."""
    return tuple(
        LocalTypeString(tuple(int(child is not None) for child in children))
        for children in tree.slots
    )


def _name(table, bits, k):
    if k != 1 or bits.k != 1:
        raise ValueError(f"classic names exist for k=1 only, got {bits}")
    return table[str(bits)]


def classic_name(bits, k=1):
    return _name(CLASSIC_NAMES, bits, k)


def classic_node_name(bits, k=1):
    return _name(CLASSIC_NODE_NAMES, bits, k)


def ternary_node_name(bits):
    if bits.k != 2:
        raise ValueError(f"{bits} is not a ternary node type")
    return TERNARY_NODE_NAMES[str(bits)]


def classic_types(tau, right_border="-inf"):
    """
    Peak, valley, double rise or double fall for each value of an ordinary
    permutation ``tau``, indexed by value. The left border is always -inf;
    the right border is -inf or +inf.
    """
    borders = {"-inf": -math.inf, "+inf": math.inf}
    if right_border not in borders:
        raise ValueError(
            f"right border must be '-inf' or '+inf', got {right_border!r}"
        )
    tau = tuple(tau)
    if sorted(tau) != list(range(1, len(tau) + 1)):
        raise ValueError(f"{tau!r} is not a permutation of 1..{len(tau)}")
    padded = (-math.inf,) + tau + (borders[right_border],)
    names = [None] * len(tau)
    for j, value in enumerate(tau, 1):
        bits = f"{int(padded[j - 1] > value)}{int(padded[j + 1] > value)}"
        names[value - 1] = CLASSIC_NAMES[bits]
    return tuple(names)


@dataclass(frozen=True)
class TypeHistogram:
    k: int
    counts: Dict[LocalTypeString, int] = field(default_factory=dict)

    @property
    def total(self):
        return sum(self.counts.values())

    def __getitem__(self, bits):
        if isinstance(bits, str):
            bits = LocalTypeString.parse(bits)
        return self.counts.get(bits, 0)

    def items(self):
        return sorted(self.counts.items())


def type_histogram(obj):
    """Counts of the local types of a permutation or node types of a tree."""
    if isinstance(obj, KStirlingPermutation):
        types = local_types(obj)
    elif isinstance(obj, KaryIncreasingTree):
        types = node_types(obj)
    else:
        raise TypeError(f"cannot classify {type(obj).__name__}")
    return TypeHistogram(obj.k, dict(Counter(types)))
