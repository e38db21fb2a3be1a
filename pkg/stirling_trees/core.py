"""
Domain types, validity checks and exact counting formulas for
k-Stirling permutations, (k+1)-ary increasing trees and plane-oriented
recursive trees.
"""
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import NamedTuple, Optional, Tuple

from ._errors import InvalidObjectError


@dataclass(frozen=True)
class ValidityReport:
    """
    Outcome of a validity check. Truthy iff the object is valid.

    ``letter`` and ``position`` are 1-based and point at the smallest
    violating letter (or node) and, for that letter, the smallest violating
    position (or slot).
    """

    valid: bool
    reason: Optional[str] = None
    letter: Optional[int] = None
    position: Optional[int] = None
    message: str = ""

    def __bool__(self):
        return self.valid


VALID = ValidityReport(True)


def _invalid(reason, message, letter=None, position=None):
    return ValidityReport(False, reason, letter, position, message)


def _check_k(k):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def _check_size(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"size must be a non-negative integer, got {n!r}")


# k-Stirling permutations


def _is_nested(word, k):
    # Letters whose copies are not exhausted yet form an increasing stack;
    # a letter may only reappear while it is on top of it.
    open_letters = []
    seen = {}
    for letter in word:
        count = seen.get(letter, 0)
        if count:
            if open_letters[-1] != letter:
                return False
        elif open_letters and open_letters[-1] > letter:
            return False
        else:
            open_letters.append(letter)
        seen[letter] = count + 1
        if count + 1 == k:
            open_letters.pop()
    return True


def validate_stirling(word, k):
    """
    Check whether ``word`` is a k-Stirling permutation.

    Parameters
    ----------
    word : sequence of int
        Candidate word.
    k : int
        Number of copies of each letter.

    Returns
    -------
    ValidityReport
        Never raises on a bad word. The checks run in order: length,
        alphabet, multiplicity and betweenness.
    """
    _check_k(k)
    word = tuple(word)
    if len(word) % k:
        return _invalid(
            "length", f"length {len(word)} is not a multiple of k={k}"
        )
    n = len(word) // k

    outside = [
        (letter, position)
        for position, letter in enumerate(word, 1)
        if not isinstance(letter, int) or not 1 <= letter <= n
    ]
    if outside:
        letter, position = min(outside, key=_letter_order)
        return _invalid(
            "alphabet",
            f"letter {letter!r} at position {position} is outside 1..{n}",
            letter,
            position,
        )

    first, last, counts = {}, {}, {}
    for position, letter in enumerate(word, 1):
        first.setdefault(letter, position)
        last[letter] = position
        counts[letter] = counts.get(letter, 0) + 1
    for letter in range(1, n + 1):
        if counts.get(letter, 0) != k:
            return _invalid(
                "multiplicity",
                f"letter {letter} occurs {counts.get(letter, 0)} times, "
                f"expected {k}",
                letter,
                first.get(letter),
            )

    if _is_nested(word, k):
        return VALID
    letter, position, enclosing = min(
        (word[position - 1], position, enclosing)
        for enclosing in range(1, n + 1)
        for position in range(first[enclosing] + 1, last[enclosing])
        if word[position - 1] < enclosing
    )
    return _invalid(
        "betweenness",
        f"letter {letter} at position {position} lies between two copies "
        f"of {enclosing}",
        letter,
        position,
    )


def _letter_order(item):
    letter, position = item
    if isinstance(letter, int):
        return (0, letter, position)
    return (1, 0, position)


@dataclass(frozen=True)
class KStirlingPermutation:
    """
    A word on 1..n in which every letter occurs k times and every letter
    between two copies of i is at least i.
    """

    word: Tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        report = validate_stirling(self.word, self.k)
        if not report:
            raise InvalidObjectError(report.message, report)

    @classmethod
    def from_digits(cls, digits, k):
        """Build from a compact digit string such as ``"112233"``."""
        return cls(tuple(int(d) for d in digits), k)

    @property
    def n(self):
        return len(self.word) // self.k

    def occurrences(self, letter):
        """1-based positions j_{i,1} < ... < j_{i,k} of ``letter``."""
        return tuple(
            position
            for position, value in enumerate(self.word, 1)
            if value == letter
        )

    def insert(self, gap):
        """Insert the block of k copies of n+1 at ``gap`` (0..kn)."""
        if not 0 <= gap <= len(self.word):
            raise IndexError(f"gap {gap} outside 0..{len(self.word)}")
        block = (self.n + 1,) * self.k
        return KStirlingPermutation(
            self.word[:gap] + block + self.word[gap:], self.k
        )

    def __str__(self):
        return " ".join(map(str, self.word))


def count_stirling(n, k):
    """Number of k-Stirling permutations of size n."""
    _check_size(n)
    _check_k(k)
    return prod(k * i + 1 for i in range(1, n))


# (k+1)-ary increasing trees


class Vacancy(NamedTuple):
    """Slot ``slot`` (0-based) of ``node``; ``node`` is None for the root."""

    node: Optional[int]
    slot: int


ROOT = Vacancy(None, 0)


def contour(slots, k, root=1):
    """
    Walk the depth-first contour of a tree given by its slot table.

    Yields the label of a node between each pair of its consecutive slots
    and a :class:`Vacancy` for each empty slot, left to right.
    """
    stack = [(root, 0)]
    while stack:
        node, h = stack.pop()
        if h:
            yield node
        if h < k:
            stack.append((node, h + 1))
        child = slots[node - 1][h]
        if child is None:
            yield Vacancy(node, h)
        else:
            stack.append((child, 0))


def validate_kary_tree(k, slots):
    """Check the slot table of a (k+1)-ary increasing tree."""
    _check_k(k)
    n = len(slots)
    parents = {}
    for node, children in enumerate(slots, 1):
        if len(children) != k + 1:
            return _invalid(
                "arity",
                f"node {node} has {len(children)} slots, expected {k + 1}",
                node,
            )
        for h, child in enumerate(children, 1):
            if child is None:
                continue
            if not isinstance(child, int) or not 1 <= child <= n:
                return _invalid(
                    "label",
                    f"node {node} slot {h} holds {child!r}, "
                    f"expected a label in 1..{n}",
                    node,
                    h,
                )
            if child <= node:
                return _invalid(
                    "increasing",
                    f"child {child} of node {node} has a smaller label",
                    node,
                    h,
                )
            if child in parents:
                return _invalid(
                    "parent",
                    f"node {child} appears in more than one slot",
                    child,
                )
            parents[child] = node
    for node in range(2, n + 1):
        if node not in parents:
            return _invalid(
                "parent", f"node {node} is not attached to the tree", node
            )
    return VALID


@dataclass(frozen=True)
class KaryIncreasingTree:
    """
    A (k+1)-ary increasing tree on nodes 1..n.

    ``slots[i - 1]`` is the tuple of the k+1 child slots of node i, each
    either None or the label of the child in that slot.
    """

    k: int
    slots: Tuple[Tuple[Optional[int], ...], ...] = ()

    def __post_init__(self):
        slots = tuple(tuple(children) for children in self.slots)
        object.__setattr__(self, "slots", slots)
        report = validate_kary_tree(self.k, slots)
        if not report:
            raise InvalidObjectError(report.message, report)

    @property
    def size(self):
        return len(self.slots)

    @property
    def root(self):
        return 1 if self.slots else None

    @cached_property
    def _positions(self):
        positions = {1: ROOT} if self.slots else {}
        for node, children in enumerate(self.slots, 1):
            for h, child in enumerate(children):
                if child is not None:
                    positions[child] = Vacancy(node, h)
        return positions

    def position_of(self, label):
        """The slot holding ``label``, :data:`ROOT` for the root."""
        return self._positions[label]

    def parent(self, label):
        return self._positions[label].node

    def contour(self):
        if self.slots:
            yield from contour(self.slots, self.k)

    def vacant_slots(self):
        """
        Empty slots in depth-first, left-to-right order. The empty tree has
        a single vacancy, the root position.
        """
        if not self.slots:
            return [ROOT]
        return [item for item in self.contour() if isinstance(item, Vacancy)]

    def insert(self, slot):
        """
        Attach node n+1 at a vacant slot, given as an index into
        :meth:`vacant_slots` or as a :class:`Vacancy`.
        """
        vacancy = self.vacant_slots()[slot] if isinstance(slot, int) else slot
        leaf = (None,) * (self.k + 1)
        if vacancy.node is None:
            if self.slots:
                raise ValueError("the root position is already taken")
            return KaryIncreasingTree(self.k, (leaf,))
        children = list(self.slots[vacancy.node - 1])
        if children[vacancy.slot] is not None:
            raise ValueError(f"{vacancy} is not vacant")
        children[vacancy.slot] = self.size + 1
        slots = list(self.slots)
        slots[vacancy.node - 1] = tuple(children)
        return KaryIncreasingTree(self.k, slots + [leaf])


def count_kary_trees(n, k):
    """Number of (k+1)-ary increasing trees with n nodes."""
    _check_size(n)
    _check_k(k)
    return prod(k * (ell - 1) + 1 for ell in range(1, n + 1))


# Plane-oriented recursive trees


class InsertionPosition(NamedTuple):
    """Insert as child number ``index`` (0-based) of ``node``."""

    node: int
    index: int


def validate_port(children):
    n = len(children)
    if not n:
        return _invalid("size", "a plane-oriented tree has at least one node")
    parents = {}
    for node, kids in enumerate(children, 1):
        for index, child in enumerate(kids, 1):
            if not isinstance(child, int) or not 1 <= child <= n:
                return _invalid(
                    "label",
                    f"child {index} of node {node} is {child!r}, "
                    f"expected a label in 1..{n}",
                    node,
                    index,
                )
            if child <= node:
                return _invalid(
                    "increasing",
                    f"child {child} of node {node} has a smaller label",
                    node,
                    index,
                )
            if child in parents:
                return _invalid(
                    "parent", f"node {child} has more than one parent", child
                )
            parents[child] = node
    for node in range(2, n + 1):
        if node not in parents:
            return _invalid(
                "parent", f"node {node} is not attached to the tree", node
            )
    return VALID


@dataclass(frozen=True)
class PortTree:
    """A plane-oriented recursive tree; ``children[i - 1]`` lists node i's."""

    children: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        children = tuple(tuple(kids) for kids in self.children)
        object.__setattr__(self, "children", children)
        report = validate_port(children)
        if not report:
            raise InvalidObjectError(report.message, report)

    @classmethod
    def single(cls):
        return cls(((),))

    @property
    def size(self):
        return len(self.children)

    @property
    def root(self):
        return 1

    def outdegree(self, label):
        return len(self.children[label - 1])

    @cached_property
    def _positions(self):
        positions = {1: ROOT}
        for node, kids in enumerate(self.children, 1):
            for index, child in enumerate(kids):
                positions[child] = Vacancy(node, index)
        return positions

    def position_of(self, label):
        return self._positions[label]

    def parent(self, label):
        return self._positions[label].node

    def insertion_positions(self):
        """The 2n-1 places for node n+1, nodes in label order."""
        return [
            InsertionPosition(node, index)
            for node, kids in enumerate(self.children, 1)
            for index in range(len(kids) + 1)
        ]

    def insert(self, position):
        if isinstance(position, int):
            position = self.insertion_positions()[position]
        kids = list(self.children[position.node - 1])
        if not 0 <= position.index <= len(kids):
            raise IndexError(f"{position} is not an insertion position")
        kids.insert(position.index, self.size + 1)
        children = list(self.children)
        children[position.node - 1] = tuple(kids)
        return PortTree(children + [()])


def count_port(n):
    """Number of plane-oriented recursive trees with n nodes, (2n-3)!!."""
    _check_size(n)
    if n == 0:
        raise ValueError("plane-oriented trees have at least one node")
    return prod(2 * ell - 1 for ell in range(1, n))


# Local type strings


@dataclass(frozen=True, order=True)
class LocalTypeString:
    """A bit string of length k+1."""

    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(self.bits)
        if len(bits) < 2 or any(bit not in (0, 1) for bit in bits):
            raise ValueError(
                f"a local type is at least two bits in {{0, 1}}, got {bits!r}"
            )
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text):
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def k(self):
        return len(self.bits) - 1

    @property
    def ones(self):
        return sum(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))

