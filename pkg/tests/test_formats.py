import json

import pytest
from hypothesis import given

from stirling_trees import (
    FormatError,
    InvalidObjectError,
    KaryIncreasingTree,
    KStirlingPermutation,
    PathDiagram,
    PathDiagramError,
    PortTree,
    block_profile,
    count_kary_trees,
    count_port,
    count_stirling,
    enum_kary_trees,
    enum_ports,
    enum_stirling,
    lr_profile,
    pathdiagram_to_tree,
    port_tree_to_pathdiagram,
    tree_to_pathdiagram,
    type_histogram,
)
from stirling_trees.formats import (
    format_histogram,
    format_kary_tree,
    format_pathdiagram,
    format_perm,
    format_port,
    format_profile,
    histogram_to_json,
    parse_kary_tree,
    parse_pathdiagram,
    parse_perm,
    parse_port,
    profile_to_json,
)
from stirling_trees.localtypes import local_types
from strategies import kary_trees, ports, stirling_perms

GOLDEN_TEXT = "(1 (2 (4 _ _ _) _ (7 _ _ _)) (5 _ _ (6 _ _ _)) (3 _ _ _))"
GOLDEN_DIAGRAM = "a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1"


def test_perm_text():
    sigma = parse_perm("1 1 2 2", 2)
    assert sigma.word == (1, 1, 2, 2)
    assert format_perm(sigma) == "1 1 2 2"
    assert parse_perm("", 2).word == ()
    assert parse_perm(" 1\n1 ", 2).word == (1, 1)


def test_perm_errors():
    with pytest.raises(FormatError) as excinfo:
        parse_perm("1 x", 2)
    assert excinfo.value.column == 3
    with pytest.raises(InvalidObjectError):
        parse_perm("1 2 1 2", 2)


def test_kary_tree_text():
    tree = parse_kary_tree(GOLDEN_TEXT, 2)
    assert tree.slots[0] == (2, 5, 3)
    assert tree.slots[4] == (None, None, 6)
    assert format_kary_tree(tree) == GOLDEN_TEXT
    assert format_kary_tree(KaryIncreasingTree(2)) == "_"
    assert parse_kary_tree(" _\n", 3) == KaryIncreasingTree(3)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("(1 _ _)", 1, 1),
        ("(1 _ _ _", 1, 9),
        ("(1 _ _ _))", 1, 10),
        ("(1 _ _ x)", 1, 8),
        ("(1 _\n_ _ x)", 2, 5),
        ("(_ _ _ _)", 1, 1),
        ("", 1, 1),
    ],
)
def test_kary_tree_errors(text, line, column):
    with pytest.raises(FormatError) as excinfo:
        parse_kary_tree(text, 2)
    assert (excinfo.value.line, excinfo.value.column) == (line, column)


def test_tree_labels_must_be_consecutive():
    with pytest.raises(InvalidObjectError):
        parse_kary_tree("(2 _ _ _)", 2)
    with pytest.raises(InvalidObjectError):
        parse_kary_tree("(2 (1 _ _ _) _ _)", 2)


def test_port_text():
    tree = parse_port("(1 (2) (3))")
    assert tree == PortTree(((2, 3), (), ()))
    assert format_port(tree) == "(1 (2) (3))"
    assert format_port(PortTree.single()) == "(1)"
    with pytest.raises(FormatError):
        parse_port("(1 _)")


def test_pathdiagram_text():
    diagram = parse_pathdiagram(GOLDEN_DIAGRAM, 2)
    assert format_pathdiagram(diagram) == GOLDEN_DIAGRAM
    assert format_kary_tree(pathdiagram_to_tree(diagram)) == GOLDEN_TEXT
    assert parse_pathdiagram(";", 2) == PathDiagram((), (), 2)
    assert format_pathdiagram(PathDiagram((), (), 2)) == ";"

    port = parse_pathdiagram("a1 b ; 0,1")
    assert port.is_port
    assert format_pathdiagram(port) == "a1 b ; 0,1"


@pytest.mark.parametrize(
    "text, column",
    [("a2:1 b", 1), ("a2:1 x ; 0,0", 6), ("c:1 ; 0,y", 9), ("a1 ; 0", 1)],
)
def test_pathdiagram_syntax_errors(text, column):
    with pytest.raises(FormatError) as excinfo:
        parse_pathdiagram(text, 2)
    assert excinfo.value.column == column


@pytest.mark.parametrize(
    "parse, text, column",
    [
        (lambda text: parse_perm(text, 2), "1 \N{SUPERSCRIPT TWO}", 3),
        (lambda text: parse_kary_tree(text, 2), "(1 _ _ \u0663)", 8),
        (lambda text: parse_pathdiagram(text, 2), "c:1 ; \u0661", 6),
        (lambda text: parse_pathdiagram(text, 2), "a\u0662:1 ; 0", 1),
    ],
)
def test_non_ascii_digits_are_rejected(parse, text, column):
    with pytest.raises(FormatError) as excinfo:
        parse(text)
    assert excinfo.value.column == column


def test_pathdiagram_structure_errors():
    with pytest.raises(PathDiagramError) as excinfo:
        parse_pathdiagram("b ; 0", 2)
    assert excinfo.value.step == 1


def test_histogram_text():
    sigma = KStirlingPermutation.from_digits("111222", 3)
    histogram = type_histogram(sigma)
    assert format_histogram(histogram) == "0000:1 0001:1"
    assert json.loads(histogram_to_json(histogram, local_types(sigma))) == {
        "k": 3,
        "histogram": {"0000": 1, "0001": 1},
        "types": ["0001", "0000"],
    }
    assert "types" not in json.loads(histogram_to_json(histogram))


def test_profile_text():
    sigma = KStirlingPermutation.from_digits("221553367788614499", 2)
    assert format_profile(block_profile(sigma)) == "2:1 3:1 4:1"
    profile = lr_profile(KaryIncreasingTree(2, [(None, 2, None), (None,) * 3]))
    assert json.loads(profile_to_json(profile)) == {
        "kind": "lr",
        "n": 2,
        "counts": {"1": 2},
        "auxiliary": 1,
    }


@given(stirling_perms())
def test_perm_text_round_trip(sigma):
    assert parse_perm(format_perm(sigma), sigma.k) == sigma


@given(kary_trees())
def test_tree_text_round_trip(tree):
    assert parse_kary_tree(format_kary_tree(tree), tree.k) == tree
    if tree.size:
        diagram = tree_to_pathdiagram(tree)
        text = format_pathdiagram(diagram)
        assert parse_pathdiagram(text, tree.k) == diagram


@given(ports())
def test_port_text_round_trip(tree):
    assert parse_port(format_port(tree)) == tree


@given(ports())
def test_port_pathdiagram_text_round_trip(tree):
    diagram = port_tree_to_pathdiagram(tree)
    assert parse_pathdiagram(format_pathdiagram(diagram)) == diagram


@pytest.mark.parametrize("n, k", [(1, 1), (3, 1), (4, 1), (2, 2), (3, 3)])
def test_distinct_objects_format_to_distinct_text(n, k):
    perms = {format_perm(sigma) for sigma in enum_stirling(n, k)}
    trees = {format_kary_tree(tree) for tree in enum_kary_trees(n, k)}
    assert len(perms) == count_stirling(n, k)
    assert len(trees) == count_kary_trees(n, k)
    ports_text = {format_port(tree) for tree in enum_ports(n + 1)}
    assert len(ports_text) == count_port(n + 1)
