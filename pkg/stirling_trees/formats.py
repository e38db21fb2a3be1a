"""
Text formats for permutations, trees, path diagrams, histograms, profiles
and series.
"""
import json
import re

from ._errors import FormatError, InvalidObjectError
from .bijections import Fall, Level, PathDiagram, Rise
from .core import KaryIncreasingTree, KStirlingPermutation, PortTree
from .series import MarkerVariable, TruncatedSeries, degree

_TREE_TOKEN = re.compile(
    r"\s*(?:(?P<open>\()|(?P<close>\))|(?P<vacant>_)"
    r"|(?P<int>\d+)|(?P<bad>\S))",
    re.ASCII,
)
_WORD = re.compile(r"\S+")
_NUMBER = re.compile(r"\d+", re.ASCII)
_REFINED_LETTER = re.compile(
    r"a(?P<ell>\d+):(?P<variant>\d+)|c:(?P<level>\d+)|b",
    re.ASCII,
)
_PORT_LETTER = re.compile(r"a(?P<ell>\d+)|c|b", re.ASCII)
_SERIES_FACTOR = re.compile(
    r"z\[(?P<cls>\d+),(?P<variant>\d+)\](?:\^(?P<exp>\d+))?",
    re.ASCII,
)
_COEFFICIENT = re.compile(r"-?\d+", re.ASCII)
_T_POWER = re.compile(r"t\^(\d+)", re.ASCII)


def _location(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _error(text, offset, message):
    return FormatError(message, *_location(text, offset))


# Permutations


def format_perm(sigma):
    return " ".join(map(str, sigma.word))


def parse_perm(text, k):
    word = []
    for match in _WORD.finditer(text):
        if not _NUMBER.fullmatch(match.group()):
            raise _error(
                text,
                match.start(),
                f"expected a letter, got {match.group()!r}",
            )
        word.append(int(match.group()))
    return KStirlingPermutation(word, k)


# Trees

_CLOSE = object()


def _format_tree(children_of, vacant):
    parts = []
    stack = [1]
    while stack:
        item = stack.pop()
        if item is _CLOSE:
            parts.append(")")
        elif item is None:
            parts.append(vacant)
        else:
            parts.append(f"({item}")
            stack.append(_CLOSE)
            stack.extend(reversed(children_of(item)))
    return " ".join(parts).replace(" )", ")")


def format_kary_tree(tree):
    if not tree.size:
        return "_"
    return _format_tree(lambda node: tree.slots[node - 1], "_")


def format_port(tree):
    return _format_tree(lambda node: tree.children[node - 1], None)


def _tokens(text):
    position = 0
    while True:
        match = _TREE_TOKEN.match(text, position)
        if not match:
            return
        kind = match.lastgroup
        if kind == "bad":
            raise _error(
                text, match.start(kind), f"unexpected {match.group(kind)!r}"
            )
        yield kind, match.group(kind), match.start(kind)
        position = match.end()


def _parse_tree(text, arity):
    """
    Parse nested ``(label child ...)`` text into a table of children by
    label. ``arity`` is the required number of children, None for any.
    """
    tokens = list(_tokens(text))
    if not tokens:
        raise _error(text, len(text), "empty input")
    children = {}
    stack = []
    done = False
    index = 0
    while index < len(tokens):
        kind, value, offset = tokens[index]
        index += 1
        if done:
            raise _error(text, offset, "text after the end of the tree")
        if kind == "open":
            if index == len(tokens) or tokens[index][0] != "int":
                raise _error(text, offset, "expected a label after '('")
            label = int(tokens[index][1])
            index += 1
            if label in children or any(f[0] == label for f in stack):
                raise _error(text, offset, f"label {label} used twice")
            stack.append((label, [], offset))
        elif kind == "close":
            if not stack:
                raise _error(text, offset, "unbalanced ')'")
            label, kids, start = stack.pop()
            if arity is not None and len(kids) != arity:
                raise _error(
                    text,
                    start,
                    f"node {label} has {len(kids)} children, "
                    f"expected {arity}",
                )
            children[label] = tuple(kids)
            if stack:
                stack[-1][1].append(label)
            else:
                done = True
        elif kind == "vacant" and arity is not None and stack:
            stack[-1][1].append(None)
        else:
            raise _error(text, offset, f"unexpected {value!r}")
    if stack:
        raise _error(text, len(text), "missing ')'")
    if sorted(children) != list(range(1, len(children) + 1)):
        raise InvalidObjectError(
            f"labels must be exactly 1..{len(children)}, "
            f"got {sorted(children)}"
        )
    return [children[label] for label in range(1, len(children) + 1)]


def parse_kary_tree(text, k):
    if text.strip() == "_":
        return KaryIncreasingTree(k)
    return KaryIncreasingTree(k, _parse_tree(text, k + 1))


def parse_port(text):
    return PortTree(_parse_tree(text, None))


# Path diagrams


def _format_letter(letter):
    if isinstance(letter, Fall):
        return "b"
    if isinstance(letter, Level):
        return "c" if letter.variant is None else f"c:{letter.variant}"
    if letter.variant is None:
        return f"a{letter.ell}"
    return f"a{letter.ell}:{letter.variant}"


def format_pathdiagram(diagram):
    word = " ".join(map(_format_letter, diagram.word))
    choices = ",".join(map(str, diagram.possibility))
    return f"{word} ; {choices}".strip()


def _parse_letter(text, match, refined):
    pattern = _REFINED_LETTER if refined else _PORT_LETTER
    found = pattern.fullmatch(match.group())
    if not found:
        raise _error(
            text, match.start(), f"not a path letter: {match.group()!r}"
        )
    if found.group("ell") is not None:
        variant = int(found.group("variant")) if refined else None
        return Rise(int(found.group("ell")), variant)
    if match.group().startswith("c"):
        return Level(int(found.group("level")) if refined else None)
    return Fall()


def parse_pathdiagram(text, k=None):
    """
    Parse ``letters ; choices``. Letters carry variants (``a2:1``,
    ``c:3``) unless ``k`` is None, which reads a plane-oriented diagram.
    """
    if text.count(";") != 1:
        raise _error(text, 0, "expected exactly one ';'")
    split = text.index(";")
    word = [
        _parse_letter(text, match, k is not None)
        for match in _WORD.finditer(text, 0, split)
    ]
    choices = []
    rest = text[split + 1 :]
    if rest.strip():
        offset = split + 1
        for item in rest.split(","):
            if not _NUMBER.fullmatch(item.strip()):
                raise _error(
                    text, offset, f"expected a number, got {item.strip()!r}"
                )
            choices.append(int(item))
            offset += len(item) + 1
    return PathDiagram(word, choices, k)


# Histograms and profiles


def format_histogram(histogram):
    return " ".join(f"{bits}:{count}" for bits, count in histogram.items())


def histogram_to_json(histogram, types=None):
    data = {
        "k": histogram.k,
        "histogram": {str(b): c for b, c in histogram.items()},
    }
    if types is not None:
        data["types"] = [str(bits) for bits in types]
    return json.dumps(data, sort_keys=True)


def format_profile(profile):
    return " ".join(f"{j}:{count}" for j, count in profile.counts)


def profile_to_json(profile):
    data = {
        "kind": profile.kind,
        "n": profile.n,
        "counts": {str(j): count for j, count in profile.counts},
    }
    if profile.auxiliary is not None:
        data["auxiliary"] = profile.auxiliary
    return json.dumps(data, sort_keys=True)


# Series


def _format_term(monomial, coeff):
    factors = [
        str(marker) if exponent == 1 else f"{marker}^{exponent}"
        for marker, exponent in monomial
    ]
    return " ".join([str(coeff), f"t^{degree(monomial)}"] + factors)


def format_series(series):
    """One term per line, ``coeff t^a z[m,i]^b ...``."""
    return "\n".join(_format_term(m, c) for m, c in series.items())


def parse_series(text, k, max_deg):
    terms = {}
    for number, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) < 2 or not _COEFFICIENT.fullmatch(fields[0]):
            raise FormatError(f"malformed term {line!r}", number, 1)
        t_match = _T_POWER.fullmatch(fields[1])
        if not t_match:
            raise FormatError(
                f"expected t^<n>, got {fields[1]!r}",
                number,
                line.index(fields[1]) + 1,
            )
        monomial = {}
        for factor in fields[2:]:
            found = _SERIES_FACTOR.fullmatch(factor)
            if not found:
                raise FormatError(
                    f"expected z[m,i] or z[m,i]^e, got {factor!r}",
                    number,
                    line.index(factor) + 1,
                )
            marker = MarkerVariable(
                int(found.group("cls")), int(found.group("variant"))
            )
            monomial[marker] = int(found.group("exp") or 1)
        key = tuple(sorted(monomial.items()))
        if degree(key) != int(t_match.group(1)):
            raise FormatError(
                "t exponent differs from the marker degree", number, 1
            )
        terms[key] = terms.get(key, 0) + int(fields[0])
    return TruncatedSeries(k, max_deg, terms)
