"""
This module implements the reflection cocycle of a Dyer group. The module M(D, X) is the direct sum
of cyclic groups H_ρ indexed by the reflections ρ = g·x·g⁻¹; the cocycle N sends an element to the
sum of its prefix conjugates weighted by the syllable exponents. The number of nonzero entries of
N(g) is the syllabic length of g, which makes the cocycle an independent length computation.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple, Union

from dyer.lib.presentation import INFINITY, Presentation
from dyer.lib.reducer import GroupElement, PresentationMismatchError, Reducer
from dyer.lib.syllabic import Syllable, SyllabicWord, check_word, format_word, merge_syllables


@dataclass(frozen=True)
class Reflection:
    element: GroupElement
    base_vertex: str


class CocycleVector:
    """
    A finitely supported map from reflections to coefficients. A coefficient of a reflection based
    at a vertex of finite order f lives in Z_f; zero coefficients are never stored.
    """

    def __init__(self, presentation: Presentation, terms: Dict[GroupElement, Tuple[str, int]] = None):
        self.presentation = presentation
        self._coefficients: Dict[GroupElement, int] = {}
        self._bases: Dict[GroupElement, str] = {}
        for element, (base_vertex, coefficient) in (terms or {}).items():
            self._add(element, base_vertex, coefficient)

    def _add(self, element: GroupElement, base_vertex: str, coefficient: int) -> None:
        total = self._coefficients.get(element, 0) + coefficient
        order = self.presentation.order(base_vertex)
        if order != INFINITY:
            total %= order
        if total:
            self._coefficients[element] = total
            self._bases.setdefault(element, base_vertex)
        else:
            self._coefficients.pop(element, None)
            self._bases.pop(element, None)

    def coefficient(self, element: GroupElement) -> int:
        return self._coefficients.get(element, 0)

    def __iter__(self) -> Iterator[Tuple[Reflection, int]]:
        for element, coefficient in self._coefficients.items():
            yield Reflection(element, self._bases[element]), coefficient

    def __len__(self) -> int:
        return len(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def __add__(self, other: 'CocycleVector') -> 'CocycleVector':
        if self.presentation != other.presentation:
            raise PresentationMismatchError("Can't add cocycle vectors of different presentations")
        result = CocycleVector(self.presentation)
        for vector in (self, other):
            for reflection, coefficient in vector:
                result._add(reflection.element, reflection.base_vertex, coefficient)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, CocycleVector):
            return NotImplemented
        return self.presentation == other.presentation and self._coefficients == other._coefficients

    def __repr__(self) -> str:
        terms = ', '.join(f"[{format_word(r.element.word)}]: {c}" for r, c in self)
        return f"CocycleVector({{{terms}}})"


@dataclass(frozen=True)
class Lengthened:
    """
    Result of an exchange when the syllable makes the element longer.
    """


LENGTHENED = Lengthened()


@dataclass(frozen=True)
class Exchange:
    index: int
    word: SyllabicWord


class DyerModule:
    """
    Cocycle computations over the reducer of a Dyer presentation.
    """

    def __init__(self, reducer: Reducer):
        if not reducer.presentation.is_dyer():
            raise NotSupportedError(f"not_supported: the cocycle is defined for Dyer presentations only, "
                                    f"this one is {reducer.presentation_class.value}")
        self.reducer = reducer
        self.presentation = reducer.presentation

    def reflection_sequence(self, word: SyllabicWord) -> List[Reflection]:
        """
        The reflections ρ_i = (s_1 ⋯ s_(i-1)) x_i (s_1 ⋯ s_(i-1))⁻¹ of a reduced word; x_i is the
        generator under the i-th syllable.

        :param word: reduced syllabic word
        :return: list of reflections, pairwise distinct
        """
        word = self._reduced(word)
        return [reflection for reflection, _ in self._reflections(word)]

    def cocycle(self, word: SyllabicWord) -> CocycleVector:
        """
        N(g) for the element g represented by any syllabic word.
        """
        word = tuple(word)
        check_word(self.presentation, word)
        vector = CocycleVector(self.presentation)
        for reflection, s in self._reflections(word):
            vector._add(reflection.element, reflection.base_vertex, s.exponent)
        return vector

    def length_via_cocycle(self, word: SyllabicWord) -> int:
        return len(self.cocycle(word))

    def act(self, element: GroupElement, vector: CocycleVector) -> CocycleVector:
        """
        Left action g·Σ a_ρ[ρ] = Σ a_ρ[gρg⁻¹].
        """
        if element.presentation != self.presentation or vector.presentation != self.presentation:
            raise PresentationMismatchError("The element and the vector must belong to the module's presentation")
        result = CocycleVector(self.presentation)
        for reflection, coefficient in vector:
            result._add(reflection.element.conjugate(element), reflection.base_vertex, coefficient)
        return result

    def exchange(self, word: SyllabicWord, s0: Syllable) -> Union[Lengthened, Exchange]:
        """
        Left-multiplies a reduced word by a syllable. When the length doesn't grow, the first i with
        x_0 = ρ_i is found and the i-th syllable is deleted or gets the exponent a_0 + a_i.

        :param word: reduced syllabic word
        :param s0: syllable x_0^a_0
        :return: LENGTHENED, or Exchange(index i counted from 1, reduced word for s0·w)
        """
        word = self._reduced(word)
        check_word(self.presentation, (s0,))
        if self.reducer.length((s0,) + word) > len(word):
            return LENGTHENED

        x0 = self.reducer.generator(s0.vertex)
        for i, (reflection, s) in enumerate(self._reflections(word), start=1):
            if reflection.element != x0:
                continue
            # ρ_i = x_0 forces f(x_i) = f(x_0), so a_0 is a canonical exponent on x_i too
            merged = merge_syllables(self.presentation, Syllable(s.vertex, s0.exponent), s)
            return Exchange(i, word[:i - 1] + ((merged,) if merged else ()) + word[i:])
        raise CocycleError(f"No reflection of '{format_word(word)}' equals {s0.vertex}")

    def _reduced(self, word: SyllabicWord) -> SyllabicWord:
        word = tuple(word)
        if not self.reducer.is_reduced(word):
            raise NotReducedError(f"The word '{format_word(word)}' is not reduced")
        return word

    def _reflections(self, word: SyllabicWord) -> Iterator[Tuple[Reflection, Syllable]]:
        prefix = self.reducer.identity()
        for s in word:
            rho = self.reducer.generator(s.vertex).conjugate(prefix)
            yield Reflection(rho, s.vertex), s
            prefix = prefix * self.reducer.generator(s.vertex, s.exponent)


class CocycleError(Exception):
    """
    The error will be raised when a cocycle computation can't be carried out
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class NotSupportedError(CocycleError):
    """
    The error will be raised when the cocycle is requested for a presentation that isn't Dyer
    """


class NotReducedError(CocycleError):
    """
    The error will be raised when an operation expecting a reduced word gets a longer one
    """
