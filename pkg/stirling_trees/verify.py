"""
Executable checks of the identities tying the object classes together,
grouped in suites. Each check yields a :class:`PropertyResult`.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import product

import numpy as np
from scipy.stats import chi2, chisquare

from .bijections import (
    coarsen,
    decode_steps,
    enum_pathdiagrams,
    enum_port_pathdiagrams,
    pathdiagram_to_tree,
    perm_to_tree,
    port_pathdiagram_to_tree,
    port_tree_to_pathdiagram,
    refine,
    tree_to_pathdiagram,
    tree_to_perm,
    variant_map,
)
from .core import (
    KStirlingPermutation,
    count_kary_trees,
    count_port,
    count_stirling,
)
from .enumeration import (
    KINDS,
    enum_kary_trees,
    enum_ports,
    enum_stirling,
    multiset_oracle,
    random_object,
    random_objects,
)
from .formats import (
    format_kary_tree,
    format_pathdiagram,
    format_perm,
    format_port,
    parse_kary_tree,
    parse_pathdiagram,
    parse_perm,
    parse_port,
)
from .localtypes import local_types, node_types, type_histogram
from .series import (
    brute_force_type_gf,
    cf_series,
    expand_words,
    walk_paths,
    words_image,
)
from .stats import (
    block_profile,
    equidistribution_report,
    lr_profile,
    outdegree_profile,
)

DEFAULT_MAX_N = 5
CHI2_QUANTILE = 0.999
UNIFORMITY_SAMPLES = 10_000
UNIFORMITY_SEED = 0
ROUND_TRIP_SAMPLES = 10_000


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    name: str
    passed: bool
    checked: int
    detail: str = ""
    informational: bool = False


def _result(suite, name, failures, checked, detail=""):
    failures = list(failures)
    if failures and not detail:
        detail = f"first failure: {failures[0]}"
    return PropertyResult(suite, name, not failures, checked, detail)


def _info(suite, name, checked, detail):
    return PropertyResult(suite, name, True, checked, detail, True)


def _sizes(max_n, cap):
    return range(1, min(max_n, cap) + 1)


def _counts(max_n):
    pairs = list(product(range(0, 8), range(1, 4)))
    yield _result(
        "counts",
        "stirling count equals tree count",
        [p for p in pairs if count_stirling(*p) != count_kary_trees(*p)],
        len(pairs),
    )
    yield _result(
        "counts",
        "plane-oriented count equals 2-Stirling count",
        [n for n in range(9) if count_port(n + 1) != count_stirling(n, 2)],
        9,
    )
    failures, checked = [], 0
    for n, k in product(_sizes(max_n, 6), range(1, 4)):
        words = [sigma.word for sigma in enum_stirling(n, k)]
        trees = [tree.slots for tree in enum_kary_trees(n, k)]
        checked += len(words) + len(trees)
        expected = count_stirling(n, k)
        for name, stream in (("stirling", words), ("kary", trees)):
            if len(stream) != expected or len(set(stream)) != expected:
                failures.append((name, n, k, len(stream)))
    for n in _sizes(max_n + 1, 7):
        trees = [tree.children for tree in enum_ports(n)]
        checked += len(trees)
        if len(trees) != count_port(n) or len(set(trees)) != len(trees):
            failures.append(("port", n, len(trees)))
    yield _result("counts", "stream sizes, no duplicates", failures, checked)

    failures, checked = [], 0
    for n, k in product(_sizes(max_n, 4), range(1, 4)):
        oracle = set(multiset_oracle(n, k))
        checked += len(oracle)
        if oracle != set(enum_stirling(n, k)):
            failures.append((n, k))
    yield _result(
        "counts", "enumeration equals multiset oracle", failures, checked
    )

    failures, checked = [], 0
    for n, k in product(_sizes(max_n, 5), range(1, 4)):
        for tree in enum_kary_trees(n, k):
            checked += 1
            if len(tree.vacant_slots()) != k * n + 1:
                failures.append(tree)
    yield _result("counts", "vacant slots number kn+1", failures, checked)


def _gessel(max_n):
    failures, checked = [], 0
    for n, k in product(_sizes(max_n, 5), range(1, 4)):
        images = set()
        for tree in enum_kary_trees(n, k):
            checked += 1
            sigma = tree_to_perm(tree)
            images.add(sigma)
            if perm_to_tree(sigma) != tree:
                failures.append(tree)
        if images != set(enum_stirling(n, k)):
            failures.append((n, k))
    yield _result("gessel", "trees and permutations biject", failures, checked)

    failures, checked = [], 0
    for n, k in product(range(0, min(max_n, 4) + 1), range(1, 3)):
        for sigma in enum_stirling(n, k):
            tree = perm_to_tree(sigma)
            for gap, vacancy in enumerate(tree.vacant_slots()):
                checked += 1
                if tree_to_perm(tree.insert(vacancy)) != sigma.insert(gap):
                    failures.append((sigma, gap))
    yield _result(
        "gessel", "gaps correspond to vacant slots", failures, checked
    )


def _types(max_n):
    failures, checked = [], 0
    for n, k in product(_sizes(max_n, 5), range(1, 4)):
        for tree in enum_kary_trees(n, k):
            checked += 1
            sigma = tree_to_perm(tree)
            types = local_types(sigma)
            if types != node_types(tree):
                failures.append(tree)
            if set(types[-1].bits) != {0}:
                failures.append(("largest letter", sigma))
            if len(type_histogram(sigma).counts) > 2 ** (k + 1):
                failures.append(("histogram keys", sigma))
    yield _result(
        "types", "local types equal node types", failures, checked
    )

    failures, checked = [], 0
    for n in _sizes(max_n + 2, 7):
        for sigma in enum_stirling(n, 1):
            checked += 1
            names = Counter(str(bits) for bits in local_types(sigma))
            if names["00"] - names["11"] != 1:
                failures.append(sigma)
    yield _result("types", "peaks exceed valleys by one", failures, checked)

    goldens = [
        ("2534716", 1, ["11", "01", "11", "01", "00", "00", "00"]),
        (
            "112233321445554666",
            3,
            ["0011", "0010", "0000", "0011", "0000", "0000"],
        ),
        ("111222", 3, ["0001", "0000"]),
    ]
    failures = []
    for digits, k, expected in goldens:
        sigma = KStirlingPermutation.from_digits(digits, k)
        if [str(bits) for bits in local_types(sigma)] != expected:
            failures.append(digits)
    yield _result("types", "golden local types", failures, len(goldens))


def _pathdiagram(max_n):
    failures, checked = [], 0
    for n, k in product(range(0, min(max_n, 5) + 1), range(1, 3)):
        trees = set()
        vmap = variant_map(k)
        for diagram in enum_pathdiagrams(n, k):
            checked += 1
            tree = pathdiagram_to_tree(diagram)
            trees.add(tree)
            if tree_to_pathdiagram(tree) != diagram:
                failures.append(diagram)
            if refine(coarsen(diagram)) != diagram:
                failures.append(("coarsen", diagram))
            letters = [vmap.letter_for(bits) for bits in node_types(tree)]
            if tuple(letters[:-1]) != diagram.word:
                failures.append(("letters", diagram))
            if any(p != h + 1 for _, p, h in decode_steps(diagram)):
                failures.append(("height", diagram))
        if len(trees) != count_stirling(n + 1, k):
            failures.append((n, k, len(trees)))
    yield _result(
        "pathdiagram", "diagrams biject with trees", failures, checked
    )

    failures, checked = [], 0
    for n in range(0, min(max_n + 1, 6) + 1):
        trees = set()
        for diagram in enum_port_pathdiagrams(n):
            checked += 1
            tree = port_pathdiagram_to_tree(diagram)
            trees.add(tree)
            if port_tree_to_pathdiagram(tree) != diagram:
                failures.append(diagram)
            if any(p != h + 1 for _, p, h in decode_steps(diagram)):
                failures.append(("height", diagram))
        if len(trees) != count_port(n + 1):
            failures.append((n, len(trees)))
    yield _result(
        "pathdiagram",
        "diagrams biject with plane-oriented trees",
        failures,
        checked,
    )


def _series(max_n):
    failures = []
    ternary = cf_series(2, max_n).all_ones()
    if ternary != [count_stirling(n + 1, 2) for n in range(max_n + 1)]:
        failures.append(ternary)
    yield _result(
        "series", "ternary all-ones coefficients", failures, max_n + 1
    )

    failures, checked = [], 0
    for k in range(1, 4):
        ones = cf_series(k, min(max_n, 4)).all_ones()
        checked += len(ones)
        if ones != [count_stirling(n + 1, k) for n in range(len(ones))]:
            failures.append((k, ones))
    yield _result(
        "series", "all-ones coefficients count trees", failures, checked
    )

    failures, checked = [], 0
    for k, top in ((1, 5), (2, 4)):
        for n in range(1, min(max_n, top) + 1):
            checked += 1
            cf = cf_series(k, n - 1)
            if brute_force_type_gf(n, k) != cf.homogeneous(
                n - 1
            ).shift_last_leaf():
                failures.append((k, n))
    yield _result("series", "brute-force oracle", failures, checked)

    failures, checked = [], 0
    for k in range(1, 3):
        deg = min(max_n, 4)
        h = k * deg
        base = cf_series(k, deg, h)
        for extra in range(1, 4):
            checked += 1
            if cf_series(k, deg, h + extra) != base:
                failures.append((k, h + extra))
    yield _result("series", "stabilization in h", failures, checked)


def _words(max_n):
    failures, checked = [], 0
    for k in range(1, 3):
        max_len = min(max_n + 1, 6)
        for h in range(0, max_len + 1):
            words = expand_words(k, h, max_len)
            direct = walk_paths(k, h, max_len)
            checked += len(words)
            if len(set(words)) != len(words) or set(words) != set(direct):
                failures.append((k, h))
            if words_image(words, k, max_len) != cf_series(k, max_len, h):
                failures.append(("image", k, h))
    yield _result("words", "recursion equals direct walks", failures, checked)


def _stats(max_n):
    failures, checked = [], 0
    notes = []
    for n in _sizes(max_n, 6):
        report = equidistribution_report(n, j_min=1)
        checked += report.objects["block"]
        if not report:
            failures.append(report.mismatch)
        verdict = "agrees" if report.auxiliary_agrees else "differs"
        notes.append(
            f"n={n}: auxiliary {verdict}, pointwise "
            f"{report.pointwise_agreement}/{report.objects['block']}"
        )
    yield _result("stats", "statistics equidistributed", failures, checked)
    yield _info(
        "stats", "outdegree two versus auxiliary", checked, "; ".join(notes)
    )

    failures, checked = [], 0
    for n in _sizes(max_n, 5):
        for tree in enum_ports(n + 1):
            checked += 1
            counts = outdegree_profile(tree).as_dict()
            if sum(counts.values()) != n + 1 or sum(
                j * c for j, c in counts.items()
            ) != n:
                failures.append(tree)
        for tree in enum_kary_trees(n, 2):
            checked += 1
            sizes = lr_profile(tree).as_dict()
            if sum(j * c for j, c in sizes.items()) != n:
                failures.append(tree)
    yield _result("stats", "profile sums", failures, checked)

    golden = KStirlingPermutation.from_digits("221553367788614499", 2)
    expected = {4: 1, 3: 1, 2: 1}
    failures = [] if block_profile(golden).as_dict() == expected else [golden]
    yield _result("stats", "golden block profile", failures, 1)


def _class_seeds(seed=UNIFORMITY_SEED):
    """One independent child seed per object class."""
    return dict(zip(KINDS, np.random.SeedSequence(seed).spawn(len(KINDS))))


def _uniformity(max_n):
    seeds = _class_seeds()
    for kind in KINDS:
        n, k = 4, 2
        if kind == "stirling":
            universe = [sigma.word for sigma in enum_stirling(n, k)]
        elif kind == "kary":
            universe = [tree.slots for tree in enum_kary_trees(n, k)]
        else:
            universe = [tree.children for tree in enum_ports(n)]
        index = {key: i for i, key in enumerate(universe)}
        observed = [0] * len(universe)
        samples = random_objects(kind, n, k, seeds[kind], UNIFORMITY_SAMPLES)
        for obj in samples:
            observed[index[_key(obj)]] += 1
        statistic, _ = chisquare(observed)
        threshold = chi2.ppf(CHI2_QUANTILE, len(universe) - 1)
        yield PropertyResult(
            "uniformity",
            f"{kind} sampler uniform",
            statistic < threshold,
            UNIFORMITY_SAMPLES,
            f"chi2={statistic:.1f} < {threshold:.1f}",
        )

    failures = [
        (kind, seed)
        for kind in KINDS
        for seed in range(20)
        if random_object(kind, 6, 2, seed) != random_object(kind, 6, 2, seed)
    ]
    yield _result("uniformity", "seeds are deterministic", failures, 60)


def _formats(max_n):
    n, k = 6, 2
    seeds = _class_seeds()
    codecs = {
        "stirling": (format_perm, lambda text: parse_perm(text, k)),
        "kary": (format_kary_tree, lambda text: parse_kary_tree(text, k)),
        "port": (format_port, parse_port),
    }
    samples = {}
    for kind in KINDS:
        write, read = codecs[kind]
        samples[kind] = list(
            random_objects(kind, n, k, seeds[kind], ROUND_TRIP_SAMPLES)
        )
        failures = [obj for obj in samples[kind] if read(write(obj)) != obj]
        yield _result(
            "formats",
            f"{kind} text round trip",
            failures,
            ROUND_TRIP_SAMPLES,
        )

    diagrams = [
        (tree_to_pathdiagram(tree), k) for tree in samples["kary"]
    ] + [(port_tree_to_pathdiagram(tree), None) for tree in samples["port"]]
    failures = [
        diagram
        for diagram, arity in diagrams
        if parse_pathdiagram(format_pathdiagram(diagram), arity) != diagram
    ]
    yield _result(
        "formats", "path diagram text round trip", failures, len(diagrams)
    )

    failures, checked = [], 0
    for size, arity in product(_sizes(max_n, 4), range(1, 3)):
        families = [
            (
                map(format_perm, enum_stirling(size, arity)),
                count_stirling(size, arity),
            ),
            (
                map(format_kary_tree, enum_kary_trees(size, arity)),
                count_kary_trees(size, arity),
            ),
            (
                map(format_pathdiagram, enum_pathdiagrams(size, arity)),
                count_stirling(size + 1, arity),
            ),
        ]
        if arity == 1:
            families += [
                (map(format_port, enum_ports(size)), count_port(size)),
                (
                    map(format_pathdiagram, enum_port_pathdiagrams(size)),
                    count_port(size + 1),
                ),
            ]
        for texts, expected in families:
            checked += expected
            distinct = len(set(texts))
            if distinct != expected:
                failures.append((size, arity, distinct, expected))
    yield _result(
        "formats", "distinct objects, distinct text", failures, checked
    )


def _key(obj):
    for attribute in ("word", "slots", "children"):
        if hasattr(obj, attribute):
            return getattr(obj, attribute)
    raise TypeError(obj)


SUITES = {
    "counts": _counts,
    "gessel": _gessel,
    "types": _types,
    "pathdiagram": _pathdiagram,
    "series": _series,
    "words": _words,
    "stats": _stats,
    "uniformity": _uniformity,
    "formats": _formats,
}


def run_suite(name, max_n=DEFAULT_MAX_N):
    """Run one suite, or every suite for ``"all"``, lazily."""
    if name == "all":
        for suite in SUITES.values():
            yield from suite(max_n)
        return
    if name not in SUITES:
        raise ValueError(
            f"unknown suite {name!r}, expected one of "
            + ", ".join(["all", *SUITES])
        )
    yield from SUITES[name](max_n)
