import pytest
from hypothesis import given
from hypothesis import strategies as st

from stirling_trees import (
    InvalidObjectError,
    KaryIncreasingTree,
    KStirlingPermutation,
    LocalTypeString,
    PortTree,
    Vacancy,
    count_kary_trees,
    count_port,
    count_stirling,
    validate_kary_tree,
    validate_port,
    validate_stirling,
)
from stirling_trees.core import ROOT, InsertionPosition

LEAF = (None, None, None)


def _is_stirling(word, k):
    if len(word) % k:
        return False
    n = len(word) // k
    if sorted(word) != [i for i in range(1, n + 1) for _ in range(k)]:
        return False
    for letter in set(word):
        first = word.index(letter)
        last = len(word) - 1 - word[::-1].index(letter)
        if any(x < letter for x in word[first:last]):
            return False
    return True


@pytest.mark.parametrize(
    "digits, k", [("111222", 3), ("122211", 3), ("11", 2), ("", 2)]
)
def test_valid_words(digits, k):
    assert validate_stirling([int(d) for d in digits], k)


@pytest.mark.parametrize(
    "word, k, reason, letter, position",
    [
        ((1, 2, 1, 2), 2, "betweenness", 1, 3),
        ((1, 1, 2), 2, "length", None, None),
        ((1, 3, 3, 1), 2, "alphabet", 3, 2),
        ((1, 1, 1, 2), 2, "multiplicity", 1, 1),
        ((2, 1, 1, 3, 2, 3), 2, "betweenness", 1, 2),
    ],
)
def test_invalid_words(word, k, reason, letter, position):
    report = validate_stirling(word, k)
    assert not report
    assert report.reason == reason
    assert report.letter == letter
    assert report.position == position


@given(st.lists(st.integers(min_value=1, max_value=4), max_size=8))
def test_validation_matches_definition(word):
    assert bool(validate_stirling(word, 2)) == _is_stirling(word, 2)


def test_constructor_raises_with_report():
    with pytest.raises(InvalidObjectError) as excinfo:
        KStirlingPermutation((1, 2, 1, 2), 2)
    assert excinfo.value.report.reason == "betweenness"
    assert isinstance(excinfo.value, ValueError)


def test_occurrences_and_insert():
    sigma = KStirlingPermutation.from_digits("122211", 3)
    assert sigma.n == 2
    assert sigma.occurrences(2) == (2, 3, 4)
    assert sigma.occurrences(1) == (1, 5, 6)
    assert KStirlingPermutation((1, 1), 2).insert(1).word == (1, 2, 2, 1)
    with pytest.raises(IndexError):
        sigma.insert(7)


@pytest.mark.parametrize(
    "n, k, expected", [(0, 2, 1), (1, 5, 1), (2, 3, 4), (5, 2, 945)]
)
def test_count_stirling(n, k, expected):
    assert count_stirling(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(1, 2, 1), (2, 2, 3), (4, 2, 105)])
def test_count_kary_trees(n, k, expected):
    assert count_kary_trees(n, k) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 3), (4, 15)])
def test_count_port(n, expected):
    assert count_port(n) == expected


def test_counts_agree():
    for n in range(8):
        for k in range(1, 4):
            assert count_stirling(n, k) == count_kary_trees(n, k)
        assert count_port(n + 1) == count_stirling(n, 2)


def test_counts_are_exact_integers():
    value = count_stirling(40, 3)
    assert isinstance(value, int)
    assert value % 4 == 0


@pytest.mark.parametrize(
    "call", [lambda: count_port(0), lambda: count_stirling(-1, 2)]
)
def test_bad_sizes_raise(call):
    with pytest.raises(ValueError):
        call()


def test_empty_tree():
    tree = KaryIncreasingTree(2)
    assert tree.size == 0
    assert tree.root is None
    assert tree.vacant_slots() == [ROOT]
    assert tree.insert(0).slots == (LEAF,)


def test_vacant_slots_depth_first():
    tree = KaryIncreasingTree(2, [(None, 2, None), LEAF])
    assert tree.vacant_slots() == [
        Vacancy(1, 0),
        Vacancy(2, 0),
        Vacancy(2, 1),
        Vacancy(2, 2),
        Vacancy(1, 2),
    ]
    assert tree.parent(2) == 1
    assert tree.position_of(2) == Vacancy(1, 1)
    assert tree.insert(3).slots == ((None, 2, None), (None, None, 3), LEAF)
    assert tree.insert(Vacancy(1, 2)).slots == ((None, 2, 3), LEAF, LEAF)


@pytest.mark.parametrize(
    "k, slots, reason",
    [
        (2, [LEAF, LEAF], "parent"),
        (2, [(None, 1, None)], "increasing"),
        (2, [(None, None)], "arity"),
        (2, [(None, 3, None), LEAF], "label"),
        (2, [(2, 2, None), LEAF], "parent"),
    ],
)
def test_invalid_trees(k, slots, reason):
    report = validate_kary_tree(k, slots)
    assert not report
    assert report.reason == reason
    with pytest.raises(InvalidObjectError):
        KaryIncreasingTree(k, slots)


def test_port_insertion_positions():
    single = PortTree.single()
    assert single.insertion_positions() == [InsertionPosition(1, 0)]
    tree = PortTree(((2, 3), (), ()))
    assert len(tree.insertion_positions()) == 2 * tree.size - 1
    assert tree.insert(InsertionPosition(1, 1)).children == (
        (2, 4, 3),
        (),
        (),
        (),
    )
    assert tree.outdegree(1) == 2
    assert tree.parent(3) == 1


@pytest.mark.parametrize(
    "children, reason",
    [((), "size"), (((2,), (1,)), "increasing"), (((), ()), "parent")],
)
def test_invalid_ports(children, reason):
    assert validate_port(children).reason == reason


def test_local_type_string():
    bits = LocalTypeString.parse("0011")
    assert bits.ones == 2
    assert bits.k == 3
    assert str(bits) == "0011"
    assert LocalTypeString.parse("0001") < bits
    with pytest.raises(ValueError):
        LocalTypeString.parse("012")
    with pytest.raises(ValueError):
        LocalTypeString((1,))
