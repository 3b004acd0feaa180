"""
This module implements the word problem engine: M-reduction of syllabic words, type II orbits,
canonical normal forms and group arithmetic on normal forms.

A word is reduced by appending its syllables one by one to an already reduced prefix. After each
step the type II orbit of the current word is searched breadth-first; when some member admits a
type I move, the move is applied and the search restarts from the shorter word. The normal form of
an element is the glex-least member of the orbit of any reduced word for it.
"""

from collections import OrderedDict, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from dyer.lib.presentation import INFINITY, Presentation, PresentationClass
from dyer.lib.syllabic import (MOperation, Syllable, SyllabicWord, check_word, format_word, inverse_word,
                               parse_word, syllable, type1_moves, type2_moves)

TraceStep = Tuple[MOperation, SyllabicWord]

# Normal forms remembered by one reducer, least recently used ones are dropped first
CACHE_SIZE = 100_000


@dataclass(frozen=True)
class OrbitBudget:
    max_orbit_size: int = 1_000_000
    max_word_length: int = 4096

    def __post_init__(self):
        for name in ('max_orbit_size', 'max_word_length'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ValueError(f"Error: {name} must be a positive integer, got {value}")


class Reducer:
    """
    Binds a presentation to a budget and memoizes normal forms. All GroupElement instances are
    produced by a reducer and keep a reference to it.
    """

    def __init__(self, presentation: Presentation, budget: OrbitBudget = None, cache_size: int = CACHE_SIZE):
        presentation_class = presentation.classify()
        if presentation_class is PresentationClass.INVALID:
            raise UnsupportedPresentationError("The presentation violates the quasi-Dyer constraints: "
                                               + "; ".join(presentation.violations()))
        self.presentation = presentation
        self.presentation_class = presentation_class
        self.budget = budget if budget is not None else OrbitBudget()
        # Property D is only known for Dyer presentations and QD_(m,k)
        self.unverified_presentation_class = not presentation.property_d_known()

        self._index = {vertex: presentation.index(vertex) for vertex in presentation.vertices}
        self._infinite = {vertex for vertex in presentation.vertices if presentation.order(vertex) == INFINITY}
        self._cache: "OrderedDict[SyllabicWord, SyllabicWord]" = OrderedDict()
        self._cache_size = cache_size

    def sort_key(self, word: SyllabicWord) -> tuple:
        """
        Graded lexicographic key: length first, then vertices by declaration order and exponents
        ordered 1 < 2 < ... (finite orders) or 1 < -1 < 2 < -2 < ... (infinite orders).
        """
        return len(word), tuple((self._index[s.vertex], self._exponent_rank(s)) for s in word)

    def _exponent_rank(self, s: Syllable) -> int:
        if s.vertex not in self._infinite:
            return s.exponent
        return 2 * s.exponent - 1 if s.exponent > 0 else -2 * s.exponent

    def type2_orbit(self, word: SyllabicWord) -> Set[SyllabicWord]:
        """
        Closure of {word} under type II moves.

        :param word: any syllabic word
        :return: the orbit; every member has the same length and represents the same element
        """
        word = self._checked(word)
        orbit, _, _ = self._search(word, stop_on_shortening=False)
        return set(orbit)

    def m_reduce(self, word: SyllabicWord, trace: List[TraceStep] = None) -> SyllabicWord:
        """
        Reduces a word by M-operations until no sequence of them can shorten it.

        :param word: any syllabic word
        :param trace: if a list is given, every applied operation is appended to it together with
                      the whole word obtained after it
        :return: an M-reduced word for the same element
        """
        reduced, _ = self._reduce(self._checked(word), trace=trace)
        return reduced

    def normal_form(self, word: SyllabicWord) -> 'GroupElement':
        word = self._checked(word)
        cached = self._recall(word)
        if cached is None:
            _, orbit = self._reduce(word)
            cached = min(orbit, key=self.sort_key)
            self._remember(word, cached)
        return GroupElement(self, cached)

    def equal(self, first: SyllabicWord, second: SyllabicWord) -> bool:
        return self.normal_form(first) == self.normal_form(second)

    def length(self, word: SyllabicWord) -> int:
        return len(self.m_reduce(word))

    def is_reduced(self, word: SyllabicWord) -> bool:
        return self.length(word) == len(word)

    def multiply(self, first: 'GroupElement', second: 'GroupElement') -> 'GroupElement':
        self._check_element(first)
        self._check_element(second)
        if not second.word:
            return first
        if not first.word:
            return second
        word = first.word + second.word
        cached = self._recall(word)
        if cached is None:
            if len(word) > self.budget.max_word_length:
                raise BudgetExceededError(f"Word length {len(word)} exceeds max_word_length "
                                          f"{self.budget.max_word_length}")
            _, orbit = self._reduce(second.word, start=first.word)
            cached = min(orbit, key=self.sort_key)
            self._remember(word, cached)
        return GroupElement(self, cached)

    def invert(self, element: 'GroupElement') -> 'GroupElement':
        self._check_element(element)
        return self.normal_form(inverse_word(self.presentation, element.word))

    def identity(self) -> 'GroupElement':
        return GroupElement(self, ())

    def generator(self, vertex: str, exponent: int = 1) -> 'GroupElement':
        return GroupElement(self, (syllable(self.presentation, vertex, exponent),))

    def parse(self, text: str) -> 'GroupElement':
        return self.normal_form(parse_word(self.presentation, text))

    def _recall(self, word: SyllabicWord) -> Optional[SyllabicWord]:
        cached = self._cache.get(word)
        if cached is not None:
            self._cache.move_to_end(word)
        return cached

    def _remember(self, word: SyllabicWord, normal_form: SyllabicWord) -> None:
        self._cache[word] = normal_form
        if len(self._cache) > self._cache_size:
            self._cache.popitem(last=False)

    def _checked(self, word: Iterable[Syllable]) -> SyllabicWord:
        word = tuple(word)
        check_word(self.presentation, word)
        if len(word) > self.budget.max_word_length:
            raise BudgetExceededError(f"Word length {len(word)} exceeds max_word_length "
                                      f"{self.budget.max_word_length}")
        return word

    def _check_element(self, element: 'GroupElement') -> None:
        if element.reducer is not self and element.presentation != self.presentation:
            raise PresentationMismatchError("The element belongs to another presentation")

    def _reduce(self, word: SyllabicWord, start: SyllabicWord = (),
                trace: List[TraceStep] = None) -> Tuple[SyllabicWord, List[SyllabicWord]]:
        """
        Appends the syllables of the word to the reduced prefix `start` one at a time.

        :return: the M-reduced word and its type II orbit
        """
        current, orbit = start, [start]
        for i, s in enumerate(word):
            current, orbit = self._shorten(current + (s,), word[i + 1:], trace)
        return current, orbit

    def _shorten(self, word: SyllabicWord, tail: SyllabicWord,
                 trace: Optional[List[TraceStep]]) -> Tuple[SyllabicWord, List[SyllabicWord]]:
        while True:
            orbit, hit, parents = self._search(word, stop_on_shortening=True)
            if hit is None:
                return word, orbit
            member, operation, result = hit
            if trace is not None:
                trace.extend((step, path_word + tail) for step, path_word in _path(parents, member))
                trace.append((operation, result + tail))
            word = result

    def _search(self, word: SyllabicWord, stop_on_shortening: bool):
        """
        Breadth-first search of the type II orbit. With stop_on_shortening the search ends at the
        first member admitting a type I move.

        :return: (orbit in discovery order, (member, type I operation, result) or None, parent links)
        """
        parents: Dict[SyllabicWord, Tuple[SyllabicWord, MOperation]] = {}
        seen = {word}
        orbit = [word]
        queue = deque([word])
        while queue:
            current = queue.popleft()
            if stop_on_shortening:
                for operation, result in type1_moves(self.presentation, current):
                    return orbit, (current, operation, result), parents
            for operation, result in type2_moves(self.presentation, current):
                if result in seen:
                    continue
                seen.add(result)
                if len(seen) > self.budget.max_orbit_size:
                    raise BudgetExceededError(f"Type II orbit of '{format_word(word)}' exceeds max_orbit_size "
                                              f"{self.budget.max_orbit_size}")
                parents[result] = (current, operation)
                orbit.append(result)
                queue.append(result)
        return orbit, None, parents


def _path(parents: Dict[SyllabicWord, Tuple[SyllabicWord, MOperation]], member: SyllabicWord) -> List[TraceStep]:
    steps = []
    while member in parents:
        previous, operation = parents[member]
        steps.append((operation, member))
        member = previous
    return steps[::-1]


class GroupElement:
    """
    A group element stored as its normal form. Two elements are equal iff they come from the same
    presentation and their normal forms coincide.
    """
    __slots__ = ('_reducer', '_word')

    def __init__(self, reducer: Reducer, word: SyllabicWord):
        self._reducer = reducer
        self._word = word

    @property
    def reducer(self) -> Reducer:
        return self._reducer

    @property
    def presentation(self) -> Presentation:
        return self._reducer.presentation

    @property
    def word(self) -> SyllabicWord:
        return self._word

    def __len__(self) -> int:
        return len(self._word)

    def is_identity(self) -> bool:
        return not self._word

    def support(self) -> FrozenSet[str]:
        return frozenset(s.vertex for s in self._word)

    def inverse(self) -> 'GroupElement':
        return self._reducer.invert(self)

    def conjugate(self, by: 'GroupElement') -> 'GroupElement':
        """
        :return: by · self · by⁻¹
        """
        return by * self * by.inverse()

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._reducer.multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self._word != other._word:
            return False
        return self._reducer is other._reducer or self.presentation == other.presentation

    def __hash__(self) -> int:
        return hash(self._word)

    def __str__(self) -> str:
        return format_word(self._word)

    def __repr__(self) -> str:
        return f"GroupElement('{self}')"


class BudgetExceededError(Exception):
    """
    The error will be raised when a computation needs more than the configured budget allows
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class PresentationMismatchError(Exception):
    """
    The error will be raised when elements of different presentations are combined
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class UnsupportedPresentationError(Exception):
    """
    The error will be raised when a presentation can't be handled by the word problem engine
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text
