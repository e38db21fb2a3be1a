"""
Exhaustive generation and uniform sampling by the insertion processes.

Streams are lazy and their order is part of the public contract: the
object of size m-1 varies slowest, the insertion place fastest.
"""
import numpy as np
from sympy.utilities.iterables import multiset_permutations

from .bijections import insert_block
from .core import (
    KaryIncreasingTree,
    KStirlingPermutation,
    PortTree,
    _check_k,
    _check_size,
    validate_stirling,
)

KINDS = ("stirling", "kary", "port")


def enum_stirling(n, k):
    _check_size(n)
    _check_k(k)
    if n == 0:
        yield KStirlingPermutation((), k)
        return
    for sigma in enum_stirling(n - 1, k):
        for gap in range(len(sigma.word) + 1):
            yield insert_block(sigma, gap)


def enum_kary_trees(n, k):
    _check_size(n)
    _check_k(k)
    if n == 0:
        yield KaryIncreasingTree(k)
        return
    for tree in enum_kary_trees(n - 1, k):
        for vacancy in tree.vacant_slots():
            yield tree.insert(vacancy)


def enum_ports(n):
    _check_size(n)
    if n == 0:
        raise ValueError("plane-oriented trees have at least one node")
    if n == 1:
        yield PortTree.single()
        return
    for tree in enum_ports(n - 1):
        for position in tree.insertion_positions():
            yield tree.insert(position)


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(
            f"unknown object class {kind!r}, expected one of "
            + ", ".join(KINDS)
        )


def _choose(rng, options):
    return options[int(rng.integers(len(options)))]


def _sample(kind, n, k, rng):
    if kind == "stirling":
        word = []
        for m in range(1, n + 1):
            gap = int(rng.integers(len(word) + 1))
            word[gap:gap] = [m] * k
        return KStirlingPermutation(word, k)
    if kind == "kary":
        tree = KaryIncreasingTree(k)
        for _ in range(n):
            tree = tree.insert(_choose(rng, tree.vacant_slots()))
        return tree
    tree = PortTree.single()
    for _ in range(n - 1):
        tree = tree.insert(_choose(rng, tree.insertion_positions()))
    return tree


def random_objects(kind, n, k=1, seed=0, count=1):
    """
    Draw ``count`` uniform objects of size ``n`` from one generator.

    Each object is grown by the insertion process with every place equally
    likely, which is uniform because every object of size m has the same
    number of insertion places.
    """
    _check_kind(kind)
    _check_size(n)
    _check_k(k)
    if kind == "port" and n == 0:
        raise ValueError("plane-oriented trees have at least one node")
    rng = np.random.default_rng(seed)
    return (_sample(kind, n, k, rng) for _ in range(count))


def random_object(kind, n, k=1, seed=0):
    (obj,) = random_objects(kind, n, k, seed)
    return obj


def multiset_oracle(n, k):
    """k-Stirling permutations found by filtering all multiset permutations."""
    letters = [letter for letter in range(1, n + 1) for _ in range(k)]
    for word in multiset_permutations(letters):
        if validate_stirling(word, k):
            yield KStirlingPermutation(word, k)
