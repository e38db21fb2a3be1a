"""
Exact truncated multivariate series for the generating function of local
types, its continued-fraction evaluation and the brute-force oracles it is
checked against.

A term is a monomial in the marker variables z[m,i]. The variable t is
implicit: the t-exponent of a term equals its total marker degree.
"""
from collections import Counter, defaultdict
from math import comb
from typing import NamedTuple, Tuple

from ._errors import AmbiguityError, SeriesError
from .bijections import Fall, Level, Rise, variant_map
from .core import _check_k
from .enumeration import enum_stirling
from .localtypes import local_types


class MarkerVariable(NamedTuple):
    """z[cls, variant]: ``cls`` occupied slots, numbered variant."""

    cls: int
    variant: int = 1

    def __str__(self):
        return f"z[{self.cls},{self.variant}]"


Z0 = MarkerVariable(0, 1)


def _monomial(exponents):
    """Normalize a mapping or pairs of ``MarkerVariable -> exponent``."""
    if isinstance(exponents, dict):
        exponents = exponents.items()
    merged = Counter()
    for marker, exponent in exponents:
        merged[MarkerVariable(*marker)] += exponent
    return tuple(sorted((m, e) for m, e in merged.items() if e))


def _mul_monomials(a, b):
    merged = dict(a)
    for marker, exponent in b:
        merged[marker] = merged.get(marker, 0) + exponent
    return tuple(sorted(merged.items()))


def degree(monomial):
    return sum(exponent for _, exponent in monomial)


class TruncatedSeries:
    """
    A series in t and the marker variables of a (k+1)-ary alphabet, known
    up to t-degree ``max_deg``.
    """

    def __init__(self, k, max_deg, terms=None):
        self.k = k
        self.max_deg = max_deg
        self._terms = {}
        for monomial, coeff in (terms or {}).items():
            monomial = _monomial(monomial)
            if coeff and degree(monomial) <= max_deg:
                self._terms[monomial] = self._terms.get(monomial, 0) + coeff
        self._terms = {m: c for m, c in self._terms.items() if c}

    @classmethod
    def one(cls, k, max_deg):
        return cls(k, max_deg, {(): 1})

    @classmethod
    def marker(cls, k, max_deg, marker, coeff=1):
        """``coeff * t * marker``."""
        return cls(k, max_deg, {((marker, 1),): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms sorted by t-degree, then by marker order."""
        return sorted(self._terms.items(), key=lambda mc: (degree(mc[0]), mc))

    def _promote(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.k, self.max_deg, {(): other})
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.k != self.k:
            raise ValueError(
                f"cannot combine series for k={self.k} and k={other.k}"
            )
        return other

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.k, self.max_deg, self._terms) == (
            other.k,
            other.max_deg,
            other._terms,
        )

    def __repr__(self):
        return (
            f"TruncatedSeries(k={self.k}, max_deg={self.max_deg}, "
            f"terms={len(self._terms)})"
        )

    def __add__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        terms = Counter(self._terms)
        terms.update(other._terms)
        return TruncatedSeries(
            self.k, min(self.max_deg, other.max_deg), terms
        )

    __radd__ = __add__

    def _by_degree(self, max_deg):
        buckets = [[] for _ in range(max_deg + 1)]
        for monomial, coeff in self._terms.items():
            d = degree(monomial)
            if d <= max_deg:
                buckets[d].append((monomial, coeff))
        return buckets

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(
                self.k,
                self.max_deg,
                {m: other * c for m, c in self._terms.items()},
            )
        other = self._promote(other)
        if other is NotImplemented:
            return other
        max_deg = min(self.max_deg, other.max_deg)
        left, right = self._by_degree(max_deg), other._by_degree(max_deg)
        terms = defaultdict(int)
        for d, left_terms in enumerate(left):
            for right_terms in right[: max_deg - d + 1]:
                for m1, c1 in left_terms:
                    for m2, c2 in right_terms:
                        terms[_mul_monomials(m1, m2)] += c1 * c2
        return TruncatedSeries(self.k, max_deg, terms)

    __rmul__ = __mul__

    def constant(self):
        return self._terms.get((), 0)

    def quasi_inverse(self):
        """1/(1 - self) for a series without constant term."""
        if self.constant():
            raise SeriesError("quasi-inverse needs a zero constant term")
        one = TruncatedSeries.one(self.k, self.max_deg)
        result = one
        for _ in range(self.max_deg):
            result = one + self * result
        return result

    def homogeneous(self, d):
        """The terms of t-degree exactly ``d``."""
        return TruncatedSeries(
            self.k,
            self.max_deg,
            {m: c for m, c in self._terms.items() if degree(m) == d},
        )

    def truncate(self, max_deg):
        if max_deg > self.max_deg:
            raise SeriesError(
                f"cannot extend a series known up to t^{self.max_deg}"
            )
        return TruncatedSeries(self.k, max_deg, self._terms)

    def all_ones(self):
        """Coefficients of t^0..t^max_deg with every marker set to 1."""
        totals = [0] * (self.max_deg + 1)
        for monomial, coeff in self._terms.items():
            totals[degree(monomial)] += coeff
        return totals

    def shift_last_leaf(self):
        """Multiply by t z[0,1], raising the truncation order by one."""
        return TruncatedSeries(
            self.k,
            self.max_deg + 1,
            {
                _mul_monomials(m, ((Z0, 1),)): c
                for m, c in self._terms.items()
            },
        )

    def coefficient(self, t_exp, markers=()):
        if t_exp > self.max_deg:
            raise SeriesError(
                f"t^{t_exp} is beyond the truncation order {self.max_deg}"
            )
        monomial = _monomial(markers)
        if degree(monomial) != t_exp:
            return 0
        return self._terms.get(monomial, 0)


def coefficient(series, t_exp, markers=()):
    """Exact coefficient of ``t^t_exp`` times the given marker monomial."""
    return series.coefficient(t_exp, markers)


def _class_sum(k, max_deg, cls, weight):
    total = TruncatedSeries(k, max_deg)
    for variant in range(1, comb(k + 1, cls) + 1):
        total += TruncatedSeries.marker(
            k, max_deg, MarkerVariable(cls, variant), weight
        )
    return total


def cf_series(k, max_deg, h=None):
    """
    Evaluate the continued fraction of local types up to ``t^max_deg``.

    The coefficient of t^n counts the (k+1)-ary trees of size n+1 by node
    type, with the last leaf left unmarked. ``h`` bounds the height of the
    underlying paths and defaults to ``k * max_deg``, which is exact up to
    the truncation order.
    """
    _check_k(k)
    if max_deg < 0:
        raise ValueError(f"max_deg must be non-negative, got {max_deg}")
    if h is None:
        h = k * max_deg
    memo = {}

    def fall(level):
        return TruncatedSeries.marker(k, max_deg, Z0, level + 1)

    def quasi(level, height):
        key = (level, height)
        if key not in memo:
            weight = level + 1
            inner = _class_sum(k, max_deg, 1, weight)
            for ell in range(1, min(k, height) + 1):
                term = _class_sum(k, max_deg, ell + 1, weight)
                for m in range(ell, 0, -1):
                    term = (
                        term * quasi(level + m, height - m) * fall(level + m)
                    )
                inner += term
            memo[key] = inner.quasi_inverse()
        return memo[key]

    return quasi(0, h)


def brute_force_type_gf(n, k):
    """Sum of t^n times the type markers over k-Stirling permutations."""
    vmap = variant_map(k)
    terms = Counter()
    for sigma in enum_stirling(n, k):
        markers = Counter(map(vmap.marker_for, local_types(sigma)))
        terms[_monomial(markers)] += 1
    return TruncatedSeries(k, n, terms)


# Word level


LabeledWord = Tuple[Tuple[object, int], ...]


def _concat(left, right, max_len):
    out = {}
    for u in left:
        for v in right:
            if len(u) + len(v) > max_len:
                continue
            w = u + v
            if w in out:
                raise AmbiguityError(w)
            out[w] = None
    return list(out)


def _union(parts):
    out = {}
    for part in parts:
        for w in part:
            if w in out:
                raise AmbiguityError(w)
            out[w] = None
    return list(out)


def _star(atoms, max_len):
    out = {(): None}
    layer = [()]
    while layer:
        layer = _concat(layer, atoms, max_len)
        for w in layer:
            if w in out:
                raise AmbiguityError(w)
            out[w] = None
    return list(out)


def expand_words(k, h, max_len):
    """
    Words of length at most ``max_len`` generated by the continued fraction
    at the level of labeled words, each letter tagged with the height it
    starts from. A word produced twice raises :class:`AmbiguityError`.
    """
    memo = {}

    def paths(level, height):
        key = (level, height)
        if key not in memo:
            atoms = [[((Level(), level),)]]
            for ell in range(1, min(k, height) + 1):
                word = [((Rise(ell), level),)]
                for m in range(ell, 0, -1):
                    word = _concat(
                        word, paths(level + m, height - m), max_len
                    )
                    word = _concat(
                        word, [((Fall(), level + m),)], max_len
                    )
                atoms.append(word)
            memo[key] = _star(_union(atoms), max_len)
        return memo[key]

    return tuple(paths(0, h))


def walk_paths(k, h, max_len):
    """
    Every path of length at most ``max_len`` from height 0 back to 0 with
    steps -1, 0, 1..k that stays within 0..h, found by direct walking.
    """
    steps = [Fall(), Level()] + [Rise(ell) for ell in range(1, k + 1)]
    found = []
    word = []

    def extend(height):
        if height == 0:
            found.append(tuple(word))
        remaining = max_len - len(word) - 1
        for letter in steps:
            after = height + letter.step
            if 0 <= after <= min(h, remaining):
                word.append((letter, height))
                extend(after)
                word.pop()

    extend(0)
    return tuple(found)


def words_image(words, k, max_deg):
    """
    Commutative image of labeled words: a letter starting at height j
    weighs (j+1) t times the sum of the markers of its class.
    """
    weights = {}
    total = TruncatedSeries(k, max_deg)
    for word in words:
        term = TruncatedSeries.one(k, max_deg)
        for letter, height in word:
            key = (type(letter), getattr(letter, "ell", 0), height)
            if key not in weights:
                if isinstance(letter, Fall):
                    weights[key] = TruncatedSeries.marker(
                        k, max_deg, Z0, height + 1
                    )
                else:
                    weights[key] = _class_sum(
                        k, max_deg, letter.step + 1, height + 1
                    )
            term = term * weights[key]
        total += term
    return total
