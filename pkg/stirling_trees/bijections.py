"""
Bijections between k-Stirling permutations, (k+1)-ary increasing trees,
plane-oriented recursive trees and labeled path diagrams.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional, Tuple, Union

from ._errors import PathDiagramError
from .core import (
    ROOT,
    KaryIncreasingTree,
    KStirlingPermutation,
    LocalTypeString,
    PortTree,
    Vacancy,
    contour,
)

# Path letters


@dataclass(frozen=True)
class Rise:
    ell: int
    variant: Optional[int] = None

    @property
    def step(self):
        return self.ell


@dataclass(frozen=True)
class Level:
    variant: Optional[int] = None

    @property
    def step(self):
        return 0


@dataclass(frozen=True)
class Fall:
    @property
    def step(self):
        return -1

    @property
    def variant(self):
        return None


Letter = Union[Rise, Level, Fall]


def _letter_name(letter):
    if isinstance(letter, Rise):
        return f"a{letter.ell}"
    return "c" if isinstance(letter, Level) else "b"


class VariantMap:
    """
    Numbering of the local types of a (k+1)-ary tree node.

    Types with ``ell + 1`` ones are the variants of the letter of step
    ``ell`` (a fall for no ones), numbered from 1 in decreasing binary
    order.
    """

    def __init__(self, k):
        self.k = k
        self._classes = tuple(
            tuple(
                LocalTypeString(
                    tuple(int(h in ones) for h in range(k + 1))
                )
                for ones in combinations(range(k + 1), count)
            )
            for count in range(k + 2)
        )

    def types_with(self, ones):
        """The local types with ``ones`` occupied slots, in variant order."""
        return self._classes[ones]

    def variant_count(self, letter):
        if isinstance(letter, Fall):
            return 1
        return len(self._classes[letter.step + 1])

    def class_and_variant(self, bits):
        ones = bits.ones
        return ones, self._classes[ones].index(bits) + 1

    def letter_for(self, bits):
        if len(bits.bits) != self.k + 1:
            raise ValueError(f"{bits} is not a type for k={self.k}")
        ones, variant = self.class_and_variant(bits)
        if ones == 0:
            return Fall()
        if ones == 1:
            return Level(variant)
        return Rise(ones - 1, variant)

    def marker_for(self, bits):
        """The marker variable z[ones, variant] of a local type."""
        from .series import MarkerVariable

        return MarkerVariable(*self.class_and_variant(bits))

    def bits_for(self, letter):
        if isinstance(letter, Fall):
            return self._classes[0][0]
        types = self._classes[letter.step + 1]
        if letter.variant is None or not 1 <= letter.variant <= len(types):
            raise ValueError(f"{letter} has no variant for k={self.k}")
        return types[letter.variant - 1]

    def letters(self):
        """Every refined letter: falls, levels, then rises by step."""
        yield Fall()
        for variant in range(1, self.k + 2):
            yield Level(variant)
        for ell in range(1, self.k + 1):
            for variant in range(1, comb(self.k + 1, ell + 1) + 1):
                yield Rise(ell, variant)


@lru_cache(maxsize=None)
def variant_map(k):
    return VariantMap(k)


# Path diagrams


@dataclass(frozen=True)
class PathDiagram:
    """
    A path word with a possibility sequence. ``k`` is None for the
    diagrams of plane-oriented trees.
    """

    word: Tuple[Letter, ...]
    possibility: Tuple[int, ...]
    k: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "possibility", tuple(self.possibility))
        _check_diagram(self)

    @property
    def is_port(self):
        return self.k is None

    def __len__(self):
        return len(self.word)

    def heights(self):
        """Running heights, starting with 0 before the first step."""
        heights = [0]
        for letter in self.word:
            heights.append(heights[-1] + letter.step)
        return heights


def _check_letter(letter, k, length, step):
    if not isinstance(letter, (Rise, Level, Fall)):
        raise PathDiagramError(f"{letter!r} is not a path letter", step)
    if k is None:
        if letter.variant is not None:
            raise PathDiagramError(
                f"{_letter_name(letter)} carries a variant in a "
                "plane-oriented diagram",
                step,
            )
        if isinstance(letter, Rise) and not 1 <= letter.ell <= length:
            raise PathDiagramError(
                f"rise a{letter.ell} outside 1..{length}", step
            )
        return
    if isinstance(letter, Rise) and not 1 <= letter.ell <= k:
        raise PathDiagramError(f"rise a{letter.ell} outside 1..{k}", step)
    if isinstance(letter, Fall):
        return
    variants = variant_map(k).variant_count(letter)
    if letter.variant is None or not 1 <= letter.variant <= variants:
        raise PathDiagramError(
            f"{_letter_name(letter)} needs a variant in 1..{variants}", step
        )


def _check_diagram(diagram):
    if len(diagram.word) != len(diagram.possibility):
        raise PathDiagramError(
            f"{len(diagram.word)} letters but "
            f"{len(diagram.possibility)} possibility entries"
        )
    height = 0
    for step, (letter, choice) in enumerate(
        zip(diagram.word, diagram.possibility), 1
    ):
        _check_letter(letter, diagram.k, len(diagram.word), step)
        if not isinstance(choice, int) or not 0 <= choice <= height:
            raise PathDiagramError(
                f"possibility {choice!r} outside 0..{height}", step
            )
        height += letter.step
        if height < 0:
            raise PathDiagramError("path goes below height 0", step)
    if height:
        raise PathDiagramError(f"path ends at height {height}, not 0")


def _decode(diagram, outdegree_slots):
    """
    Run the insertion process of a diagram.

    Yields ``(label, pending, table)`` after each step, where ``pending``
    is the planar list of slots still waiting for a node and ``table`` the
    slot table built so far.
    """
    table = [[] for _ in range(len(diagram) + 1)]
    pending = [ROOT]
    for label, (letter, choice) in enumerate(
        zip(diagram.word, diagram.possibility), 1
    ):
        _attach(table, pending[choice], label)
        table[label - 1], occupied = outdegree_slots(letter)
        pending[choice : choice + 1] = [Vacancy(label, h) for h in occupied]
        yield label, pending, table
    (last,) = pending
    _attach(table, last, len(diagram) + 1)
    table[len(diagram)] = outdegree_slots(None)[0]
    yield len(diagram) + 1, [], table


def _attach(table, vacancy, label):
    if vacancy.node is not None:
        table[vacancy.node - 1][vacancy.slot] = label


def _kary_slots(k):
    vmap = variant_map(k)

    def slots_for(letter):
        if letter is None:
            return [None] * (k + 1), []
        bits = vmap.bits_for(letter).bits
        return [None] * (k + 1), [h for h, bit in enumerate(bits) if bit]

    return slots_for


def _port_slots(letter):
    degree = 0 if letter is None else letter.step + 1
    return [None] * degree, list(range(degree))


def _require_kary(diagram):
    if diagram.is_port:
        raise ValueError(
            "plane-oriented diagram; use port_pathdiagram_to_tree"
        )


def pathdiagram_to_tree(diagram):
    """Decode a (k+1)-ary path diagram of length n into a tree of size n+1."""
    _require_kary(diagram)
    *_, (_, _, table) = _decode(diagram, _kary_slots(diagram.k))
    return KaryIncreasingTree(diagram.k, table)


def port_pathdiagram_to_tree(diagram):
    if not diagram.is_port:
        raise ValueError("(k+1)-ary diagram; use pathdiagram_to_tree")
    *_, (_, _, table) = _decode(diagram, _port_slots)
    return PortTree(table)


def _encode(tree, labels, occupied, letter_for):
    pending = [ROOT]
    word, choices = [], []
    for label in labels:
        choice = pending.index(tree.position_of(label))
        pending[choice : choice + 1] = [
            Vacancy(label, h) for h in occupied(label)
        ]
        word.append(letter_for(label))
        choices.append(choice)
    return word, choices


def tree_to_pathdiagram(tree):
    """Encode a (k+1)-ary tree of size n+1 as a path diagram of length n."""
    if not tree.size:
        raise ValueError("the empty tree has no path diagram")
    vmap = variant_map(tree.k)

    def occupied(label):
        return [
            h
            for h, child in enumerate(tree.slots[label - 1])
            if child is not None
        ]

    def letter_for(label):
        bits = tuple(int(c is not None) for c in tree.slots[label - 1])
        return vmap.letter_for(LocalTypeString(bits))

    word, choices = _encode(
        tree, range(1, tree.size), occupied, letter_for
    )
    return PathDiagram(word, choices, tree.k)


def port_tree_to_pathdiagram(tree):
    def letter_for(label):
        degree = tree.outdegree(label)
        if degree == 0:
            return Fall()
        return Level() if degree == 1 else Rise(degree - 1)

    word, choices = _encode(
        tree,
        range(1, tree.size),
        lambda label: range(tree.outdegree(label)),
        letter_for,
    )
    return PathDiagram(word, choices)


def _diagrams(n, letters):
    word, choices = [], []

    def extend(height):
        if len(word) == n:
            yield tuple(word), tuple(choices)
            return
        remaining = n - len(word) - 1
        for letter in letters:
            after = height + letter.step
            if after < 0 or after > remaining:
                continue
            word.append(letter)
            for choice in range(height + 1):
                choices.append(choice)
                yield from extend(after)
                choices.pop()
            word.pop()

    return extend(0)


def enum_pathdiagrams(n, k):
    """Every (k+1)-ary path diagram of length n."""
    for word, choices in _diagrams(n, list(variant_map(k).letters())):
        yield PathDiagram(word, choices, k)


def enum_port_pathdiagrams(n):
    letters = [Fall(), Level()] + [Rise(ell) for ell in range(1, n + 1)]
    for word, choices in _diagrams(n, letters):
        yield PathDiagram(word, choices)


# Unrefined diagrams


@dataclass(frozen=True)
class CoarseDiagram:
    """
    A path diagram over the unrefined letters of a (k+1)-ary alphabet.
    At height j a rise of step ell has C(k+1, ell+1)(j+1) possibilities,
    a level (k+1)(j+1) and a fall j+1.
    """

    word: Tuple[Letter, ...]
    possibility: Tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "possibility", tuple(self.possibility))
        if len(self.word) != len(self.possibility):
            raise PathDiagramError(
                "word and possibility sequence differ in length"
            )
        vmap = variant_map(self.k)
        height = 0
        for step, (letter, choice) in enumerate(
            zip(self.word, self.possibility), 1
        ):
            if letter.variant is not None:
                raise PathDiagramError("unrefined letters only", step)
            if isinstance(letter, Rise) and not 1 <= letter.ell <= self.k:
                raise PathDiagramError(
                    f"rise a{letter.ell} outside 1..{self.k}", step
                )
            bound = vmap.variant_count(letter) * (height + 1)
            if not 0 <= choice < bound:
                raise PathDiagramError(
                    f"possibility {choice} outside 0..{bound - 1}", step
                )
            height += letter.step
            if height < 0:
                raise PathDiagramError("path goes below height 0", step)
        if height:
            raise PathDiagramError(f"path ends at height {height}, not 0")


def coarsen(diagram):
    """Fold the letter variants of a refined diagram into its choices."""
    _require_kary(diagram)
    word, choices = [], []
    for letter, choice, height in zip(
        diagram.word, diagram.possibility, diagram.heights()
    ):
        if isinstance(letter, Fall):
            word.append(letter)
            choices.append(choice)
            continue
        word.append(Rise(letter.ell) if isinstance(letter, Rise) else Level())
        choices.append((letter.variant - 1) * (height + 1) + choice)
    return CoarseDiagram(word, choices, diagram.k)


def refine(diagram):
    word, choices = [], []
    height = 0
    for letter, choice in zip(diagram.word, diagram.possibility):
        variant, choice = divmod(choice, height + 1)
        if isinstance(letter, Rise):
            letter = Rise(letter.ell, variant + 1)
        elif isinstance(letter, Level):
            letter = Level(variant + 1)
        word.append(letter)
        choices.append(choice)
        height += letter.step
    return PathDiagram(word, choices, diagram.k)


# Permutations and trees


def tree_to_perm(tree):
    """The depth-first contour code of a (k+1)-ary increasing tree."""
    word = tuple(item for item in tree.contour() if isinstance(item, int))
    return KStirlingPermutation(word, tree.k)


def perm_to_tree(sigma):
    """Split at the k copies of the minimum, recursively."""
    k, word = sigma.k, sigma.word
    slots = [[None] * (k + 1) for _ in range(sigma.n)]
    segments = [(0, len(word))] if word else []
    while segments:
        lo, hi = segments.pop()
        root = min(word[lo:hi])
        cuts = [p for p in range(lo, hi) if word[p] == root]
        bounds = [lo - 1] + cuts + [hi]
        for h in range(k + 1):
            start, stop = bounds[h] + 1, bounds[h + 1]
            if start < stop:
                slots[root - 1][h] = min(word[start:stop])
                segments.append((start, stop))
    return KaryIncreasingTree(k, slots)


def insert_block(sigma, gap):
    """Insert the block (n+1)^k at gap ``gap``."""
    return sigma.insert(gap)


def flatten_trace(diagram):
    """
    Partial codes of a (k+1)-ary diagram after each insertion.

    Entry 0 is the code before the first step. Pending slots appear as
    None; the last entry is the code of the decoded tree.
    """
    _require_kary(diagram)
    k = diagram.k
    trace = [(None,)]
    for _, pending, table in _decode(diagram, _kary_slots(k)):
        waiting = set(pending)
        trace.append(
            tuple(
                None if isinstance(item, Vacancy) else item
                for item in contour(table, k)
                if not isinstance(item, Vacancy) or item in waiting
            )
        )
    return trace


def decode_steps(diagram):
    """
    ``(label, pending, height)`` after each step of the decoding of a
    diagram, for checking the height/vacancy law.
    """
    slots_for = _port_slots if diagram.is_port else _kary_slots(diagram.k)
    heights = diagram.heights()
    for label, pending, _ in _decode(diagram, slots_for):
        if label <= len(diagram):
            yield label, len(pending), heights[label]
