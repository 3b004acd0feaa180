"""
This module implements syllables (nontrivial powers of generators), syllabic words and the two
kinds of elementary M-operations: type I merges or cancels two adjacent syllables on the same
vertex, type II replaces an alternating factor [s, t]_m by [t, s]_m.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Tuple

from dyer.lib.presentation import INFINITY, Presentation

_TOKEN = re.compile(r'^([A-Za-z0-9]+)(?:\^(-?\d+))?$')


@dataclass(frozen=True)
class Syllable:
    vertex: str
    exponent: int

    def __str__(self) -> str:
        return format_syllable(self)


SyllabicWord = Tuple[Syllable, ...]


class MoveKind(Enum):
    MERGE = 'TypeI-merge'
    CANCEL = 'TypeI-cancel'
    BRAID = 'TypeII'


@dataclass(frozen=True)
class MOperation:
    kind: MoveKind
    position: int
    length: int

    def __str__(self) -> str:
        return f"{self.kind.value} @{self.position} len {self.length}"


def syllable(presentation: Presentation, vertex: str, exponent: int) -> Syllable:
    """
    Builds a syllable with its exponent stored canonically: in {1, ..., f-1} for a finite order f,
    any nonzero integer for an infinite order.

    :param presentation: the presentation the vertex belongs to
    :param vertex: vertex identifier
    :param exponent: any integer not divisible by the order
    :return: canonical syllable
    """
    order = presentation.order(vertex)
    if order != INFINITY:
        exponent %= order
    if exponent == 0:
        raise SyllableError(f"Exponent of '{vertex}' is trivial modulo its order")
    return Syllable(vertex, exponent)


def generator(presentation: Presentation, vertex: str) -> Syllable:
    return syllable(presentation, vertex, 1)


def inverse_syllable(presentation: Presentation, s: Syllable) -> Syllable:
    return syllable(presentation, s.vertex, -s.exponent)


def inverse_word(presentation: Presentation, word: SyllabicWord) -> SyllabicWord:
    return tuple(inverse_syllable(presentation, s) for s in reversed(word))


def merge_syllables(presentation: Presentation, s: Syllable, t: Syllable) -> Optional[Syllable]:
    """
    Multiplies two syllables on the same vertex.

    :return: the syllable x^(a+b), or None when the product is the identity
    """
    if s.vertex != t.vertex:
        raise SyllableError(f"Can't merge syllables on distinct vertices '{s.vertex}' and '{t.vertex}'")
    total = s.exponent + t.exponent
    order = presentation.order(s.vertex)
    if order != INFINITY:
        total %= order
    return Syllable(s.vertex, total) if total else None


def braid_degree(presentation: Presentation, s: Syllable, t: Syllable) -> Optional[int]:
    """
    Length m of the braid relation [s, t]_m = [t, s]_m that holds between two syllables on distinct
    vertices. Commuting generators make every pair of their powers commute. Across an edge with
    m > 2 only the half-order powers braid, and then with exactly that m.

    :return: m >= 2, or None when no type II move exists for the pair
    """
    if s.vertex == t.vertex:
        raise SyllableError(f"Braid degree needs distinct vertices, got '{s.vertex}' twice")
    m = presentation.edge_label(s.vertex, t.vertex)
    if m is None:
        return None
    if m == 2:
        return 2
    if s.exponent == _half_order(presentation, s.vertex) and t.exponent == _half_order(presentation, t.vertex):
        return m
    return None


def alternating_word(s: Syllable, t: Syllable, m: int) -> SyllabicWord:
    """
    :return: (s, t, s, ...) of length m
    """
    if m < 1:
        raise SyllableError(f"Alternating word length must be positive, got {m}")
    return tuple(s if i % 2 == 0 else t for i in range(m))


def type1_moves(presentation: Presentation, word: SyllabicWord) -> Iterator[Tuple[MOperation, SyllabicWord]]:
    for i in range(len(word) - 1):
        s, t = word[i], word[i + 1]
        if s.vertex != t.vertex:
            continue
        merged = merge_syllables(presentation, s, t)
        if merged is None:
            yield MOperation(MoveKind.CANCEL, i, 2), word[:i] + word[i + 2:]
        else:
            yield MOperation(MoveKind.MERGE, i, 2), word[:i] + (merged,) + word[i + 2:]


def type2_moves(presentation: Presentation, word: SyllabicWord) -> Iterator[Tuple[MOperation, SyllabicWord]]:
    for i in range(len(word) - 1):
        s, t = word[i], word[i + 1]
        if s.vertex == t.vertex:
            continue
        m = braid_degree(presentation, s, t)
        if m is None or i + m > len(word):
            continue
        if word[i:i + m] == alternating_word(s, t, m):
            yield MOperation(MoveKind.BRAID, i, m), word[:i] + alternating_word(t, s, m) + word[i + m:]


def enumerate_moves(presentation: Presentation, word: SyllabicWord) -> List[Tuple[MOperation, SyllabicWord]]:
    """
    Lists every single elementary M-operation applicable to the word, type I moves first.

    :param presentation: the presentation
    :param word: a syllabic word over the presentation
    :return: list of (operation, resulting word)
    """
    check_word(presentation, word)
    return list(type1_moves(presentation, word)) + list(type2_moves(presentation, word))


def apply_move(presentation: Presentation, word: SyllabicWord, operation: MOperation) -> SyllabicWord:
    """
    Replays one recorded operation on a word.

    :return: the rewritten word
    """
    candidates = type1_moves if operation.kind is not MoveKind.BRAID else type2_moves
    for candidate, result in candidates(presentation, word):
        if candidate == operation:
            return result
    raise SyllableError(f"Operation {operation} doesn't apply to '{format_word(word)}'")


def check_word(presentation: Presentation, word: SyllabicWord) -> None:
    for s in word:
        if not isinstance(s, Syllable):
            raise SyllableError(f"{s!r} is not a syllable")
        if syllable(presentation, s.vertex, s.exponent) != s:
            raise SyllableError(f"Syllable {s} is not stored canonically")


def syllables(presentation: Presentation) -> List[Syllable]:
    """
    The finite syllable generating set S(X), vertex by vertex in declaration order.
    """
    result = []
    for vertex in presentation.vertices:
        order = presentation.order(vertex)
        if order == INFINITY:
            raise SyllableError(f"Vertex '{vertex}' has infinite order, its syllables can't be listed")
        result.extend(Syllable(vertex, exponent) for exponent in range(1, order))
    return result


def parse_word(presentation: Presentation, text: str) -> SyllabicWord:
    """
    Parses the word token syntax: whitespace-separated 'name' or 'name^k' with k a nonzero integer.

    :param presentation: the presentation that canonicalizes exponents
    :param text: e.g. 'y x^-2 y^3'; the empty string is the empty word, tokens that are trivial
                 modulo the order of their vertex are dropped
    :return: the syllabic word
    """
    word = []
    for token in text.split():
        match = _TOKEN.match(token)
        if not match:
            raise SyllableError(f"Can't parse token '{token}'")
        vertex, exponent = match.group(1), int(match.group(2)) if match.group(2) else 1
        if exponent == 0:
            raise SyllableError(f"Token '{token}' has a zero exponent")
        order = presentation.order(vertex)
        if order != INFINITY and exponent % order == 0:
            continue
        word.append(syllable(presentation, vertex, exponent))
    return tuple(word)


def format_syllable(s: Syllable) -> str:
    return s.vertex if s.exponent == 1 else f"{s.vertex}^{s.exponent}"


def format_word(word: SyllabicWord) -> str:
    return ' '.join(format_syllable(s) for s in word)


def _half_order(presentation: Presentation, vertex: str) -> Optional[int]:
    order = presentation.order(vertex)
    if order == INFINITY or order % 2:
        return None
    return order // 2


class SyllableError(Exception):
    """
    The error will be raised when a syllable or a syllabic word is malformed
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text
