import pytest
from hypothesis import given

from stirling_trees import (
    InvalidObjectError,
    KaryIncreasingTree,
    KStirlingPermutation,
    LocalTypeString,
    PortTree,
    classic_name,
    classic_node_name,
    classic_types,
    enum_stirling,
    local_types,
    local_types_of_word,
    node_types,
    ternary_node_name,
    tree_to_perm,
    type_histogram,
)
from strategies import kary_trees, stirling_perms

LEAF = (None, None, None)


def _types(sigma):
    return [str(bits) for bits in local_types(sigma)]


@pytest.mark.parametrize(
    "digits, k, expected",
    [
        ("2534716", 1, ["11", "01", "11", "01", "00", "00", "00"]),
        (
            "112233321445554666",
            3,
            ["0011", "0010", "0000", "0011", "0000", "0000"],
        ),
        ("111222", 3, ["0001", "0000"]),
        ("111", 3, ["0000"]),
        ("", 2, []),
    ],
)
def test_local_types(digits, k, expected):
    assert _types(KStirlingPermutation.from_digits(digits, k)) == expected


def test_local_types_of_invalid_word_raise():
    with pytest.raises(InvalidObjectError):
        local_types_of_word((1, 2, 1, 2), 2)


def test_node_types():
    assert [str(g) for g in node_types(KaryIncreasingTree(2, [LEAF]))] == [
        "000"
    ]
    tree = KaryIncreasingTree(2, [(None, 2, None), LEAF])
    assert [str(g) for g in node_types(tree)] == ["010", "000"]


@given(kary_trees())
def test_local_types_of_code_are_node_types(tree):
    assert local_types(tree_to_perm(tree)) == node_types(tree)


@given(stirling_perms())
def test_largest_letter_is_all_zero(sigma):
    if sigma.n:
        assert local_types(sigma)[-1].ones == 0


def test_peaks_exceed_valleys_by_one():
    for n in range(1, 7):
        for sigma in enum_stirling(n, 1):
            histogram = type_histogram(sigma)
            assert histogram["00"] - histogram["11"] == 1


def test_classic_names():
    assert classic_name(LocalTypeString.parse("01")) == "double rise"
    assert classic_name(LocalTypeString.parse("11")) == "valley"
    assert classic_node_name(LocalTypeString.parse("10")) == (
        "left-branching node"
    )
    assert ternary_node_name(LocalTypeString.parse("101")) == (
        "(left,right)-branching node"
    )
    with pytest.raises(ValueError):
        classic_name(LocalTypeString.parse("001"))
    with pytest.raises(ValueError):
        ternary_node_name(LocalTypeString.parse("01"))


def test_classic_types_borders():
    assert classic_types((2, 1, 3)) == ("valley", "peak", "peak")
    assert classic_types((2, 1, 3), right_border="+inf") == (
        "valley",
        "peak",
        "double rise",
    )
    with pytest.raises(ValueError):
        classic_types((2, 1, 3), right_border="0")
    with pytest.raises(ValueError):
        classic_types((1, 1))


def test_type_histogram():
    histogram = type_histogram(KStirlingPermutation.from_digits("111222", 3))
    assert histogram.total == 2
    assert histogram["0001"] == 1
    assert histogram["0000"] == 1
    assert histogram["0011"] == 0
    assert [str(bits) for bits, _ in histogram.items()] == ["0000", "0001"]


@given(kary_trees())
def test_histogram_keys_are_bounded(tree):
    histogram = type_histogram(tree)
    assert histogram.total == tree.size
    assert len(histogram.counts) <= 2 ** (tree.k + 1)


def test_type_histogram_rejects_ports():
    with pytest.raises(TypeError):
        type_histogram(PortTree.single())
