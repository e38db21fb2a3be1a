import pytest
from hypothesis import given

from stirling_trees import (
    KaryIncreasingTree,
    KStirlingPermutation,
    PortTree,
    StatProfile,
    block_profile,
    count_port,
    count_stirling,
    equidistribution_report,
    lr_profile,
    outdegree_profile,
    perm_to_tree,
)
from strategies import ports

LEAF = (None, None, None)


@pytest.mark.parametrize(
    "children, expected",
    [
        (((),), {0: 1}),
        (((2,), (3,), ()), {0: 1, 1: 2}),
        (((2, 3, 4), (), (), ()), {0: 3, 3: 1}),
    ],
)
def test_outdegree_profile(children, expected):
    assert outdegree_profile(PortTree(children)).as_dict() == expected


@given(ports())
def test_outdegree_sums(tree):
    profile = outdegree_profile(tree)
    assert sum(count for _, count in profile.counts) == tree.size
    assert sum(j * count for j, count in profile.counts) == tree.size - 1


@pytest.mark.parametrize(
    "slots, expected, auxiliary",
    [
        ([LEAF], {1: 1}, 0),
        ([(None, 2, None), LEAF], {1: 2}, 1),
        ([(2, None, None), LEAF], {2: 1}, 0),
        ([(2, 3, None), LEAF, LEAF], {1: 1, 2: 1}, 0),
    ],
)
def test_lr_profile(slots, expected, auxiliary):
    profile = lr_profile(KaryIncreasingTree(2, slots))
    assert profile.as_dict() == expected
    assert profile.auxiliary == auxiliary


def test_lr_profile_needs_ternary_trees():
    with pytest.raises(ValueError):
        lr_profile(KaryIncreasingTree(1, [(None, None)]))


@pytest.mark.parametrize(
    "digits, expected",
    [
        ("221553367788614499", {4: 1, 3: 1, 2: 1}),
        ("11", {1: 1}),
        ("1122", {2: 1}),
        ("1221", {1: 2}),
    ],
)
def test_block_profile(digits, expected):
    profile = block_profile(KStirlingPermutation.from_digits(digits, 2))
    assert profile.as_dict() == expected
    assert profile.kind == "block"


def test_profile_lookup():
    profile = StatProfile.from_counter("block", 3, {2: 1, 1: 0, 3: 2})
    assert profile.counts == ((2, 1), (3, 2))
    assert profile[3] == 2
    assert profile[7] == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_equidistribution_for_every_index(n):
    report = equidistribution_report(n, j_min=1)
    assert report
    assert report.checked == tuple(range(1, n + 1))
    assert report.objects == {
        "block": count_stirling(n, 2),
        "lr": count_stirling(n, 2),
        "outdeg": count_port(n + 1),
    }
    assert report.pointwise_agreement == report.objects["block"]


def test_block_profile_matches_lr_profile_of_the_tree():
    sigma = KStirlingPermutation.from_digits("221553367788614499", 2)
    tree = perm_to_tree(sigma)
    assert block_profile(sigma).counts == lr_profile(tree).counts


@pytest.mark.slow
def test_equidistribution_from_three():
    report = equidistribution_report(5)
    assert report.passed
    assert report.checked == (3, 4, 5)
    assert report.mismatch is None


def test_auxiliary_comparison_is_informational():
    report = equidistribution_report(2, j_min=1)
    assert report.passed
    assert not report.auxiliary_agrees


def test_equidistribution_needs_a_positive_size():
    with pytest.raises(ValueError):
        equidistribution_report(0)


def test_report_frame():
    pytest.importorskip("pandas")
    report = equidistribution_report(2, j_min=1)
    df = report.to_frame()
    assert list(df.columns) == ["block", "lr", "outdeg"]
    assert df.loc[(1, 2), "block"] == 1
    assert df.loc[(1, 0), "outdeg"] == 2

    renamed = report.to_frame(columns=["block", "lr"], header=["B", "LR"])
    assert list(renamed.columns) == ["B", "LR"]
    assert list(report.to_frame(header={"lr": "LR"}).columns) == [
        "block",
        "LR",
        "outdeg",
    ]
    with pytest.raises(ValueError):
        report.to_frame(header=["only one"])
