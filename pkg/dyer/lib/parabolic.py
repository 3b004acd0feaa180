"""
This module implements computations with parabolic subgroups gD_Yg⁻¹: membership, minimal coset
and double coset representatives, intersections, containment and the parabolic closure of a
finite set of elements.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from dyer.lib.oracles import DEFAULT_MAX_ENUMERATION, enumerate_group
from dyer.lib.presentation import UnknownVertexError
from dyer.lib.reducer import GroupElement, PresentationMismatchError, Reducer
from dyer.lib.syllabic import Syllable, SyllabicWord


class Side(Enum):
    LEFT = 'left'
    RIGHT = 'right'


class ClosureMode(Enum):
    FOLD = 'fold'
    ENUMERATE = 'enumerate'


@dataclass(frozen=True)
class ParabolicSubgroup:
    """
    The subgroup conjugator · D_generators · conjugator⁻¹. Equality of the dataclass is
    representational; use ParabolicCalculus.equivalent for equality of subgroups.
    """
    conjugator: GroupElement
    generators: FrozenSet[str]


@dataclass(frozen=True)
class CosetDecomposition:
    representative: GroupElement
    remainder: GroupElement
    non_unique_possible: bool


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    left: GroupElement
    representative: GroupElement
    right: GroupElement


class ParabolicCalculus:
    def __init__(self, reducer: Reducer, max_enumeration: int = DEFAULT_MAX_ENUMERATION):
        self.reducer = reducer
        self.presentation = reducer.presentation
        self.max_enumeration = max_enumeration
        self._parabolics: Optional[List[Tuple[ParabolicSubgroup, FrozenSet[GroupElement]]]] = None

    def parabolic(self, conjugator: GroupElement, generators: Iterable[str]) -> ParabolicSubgroup:
        """
        Builds gD_Yg⁻¹ with the conjugator replaced by the minimal element of the coset gD_Y.
        The trivial subgroup always gets the identity as conjugator.
        """
        generators = self._vertices(generators)
        self._check(conjugator)
        if not generators:
            return ParabolicSubgroup(self.reducer.identity(), generators)
        representative = self.min_coset_rep(conjugator, generators, Side.LEFT).representative
        return ParabolicSubgroup(representative, generators)

    def standard(self, generators: Iterable[str]) -> ParabolicSubgroup:
        return self.parabolic(self.reducer.identity(), generators)

    def member_standard(self, element: GroupElement, generators: Iterable[str]) -> bool:
        """
        :return: True iff the element lies in D_Y, that is its support is inside Y
        """
        self._require_property_d()
        self._check(element)
        return element.support() <= self._vertices(generators)

    @staticmethod
    def intersect_standard(first: Iterable[str], second: Iterable[str]) -> FrozenSet[str]:
        return frozenset(first) & frozenset(second)

    def min_coset_rep(self, element: GroupElement, generators: Iterable[str], side: Side) -> CosetDecomposition:
        """
        Strips syllables on Y from the end (Side.LEFT, coset gD_Y) or from the start (Side.RIGHT,
        coset D_Yg) of a reduced word for the element, looking through its whole type II orbit,
        until no orbit member ends (starts) with a syllable on Y.

        :param element: g
        :param generators: Y
        :param side: which coset
        :return: g0 and h with g = g0·h (LEFT) or g = h·g0 (RIGHT); non_unique_possible is set on
                 presentations that aren't Dyer, where the minimal element may not be unique
        """
        generators = self._vertices(generators)
        self._check(element)
        word = element.word
        stripped: List[Syllable] = []
        while True:
            member = self._strippable(word, generators, side)
            if member is None:
                break
            if side is Side.LEFT:
                stripped.insert(0, member[-1])
                word = member[:-1]
            else:
                stripped.append(member[0])
                word = member[1:]
        return CosetDecomposition(self.reducer.normal_form(word), self.reducer.normal_form(tuple(stripped)),
                                  not self.presentation.is_dyer())

    def min_double_coset_rep(self, left_generators: Iterable[str], element: GroupElement,
                             right_generators: Iterable[str]) -> DoubleCosetDecomposition:
        """
        Alternates right-coset and left-coset stripping until neither removes anything.

        :return: (h, g0, h') with g = h·g0·h', h in D_Y and h' in D_Y'
        """
        self._require_dyer()
        left_generators = self._vertices(left_generators)
        right_generators = self._vertices(right_generators)
        left = right = self.reducer.identity()
        current = element
        while True:
            from_left = self.min_coset_rep(current, left_generators, Side.RIGHT)
            from_right = self.min_coset_rep(from_left.representative, right_generators, Side.LEFT)
            left = left * from_left.remainder
            right = from_right.remainder * right
            current = from_right.representative
            if from_left.remainder.is_identity() and from_right.remainder.is_identity():
                return DoubleCosetDecomposition(left, current, right)

    def intersect(self, first: ParabolicSubgroup, second: ParabolicSubgroup) -> ParabolicSubgroup:
        """
        Intersection of g₁D_Yg₁⁻¹ and g₂D_Y'g₂⁻¹. With a = g₁⁻¹g₂ = h·a0·h' split over the double
        coset D_Y a D_Y', the intersection is (g₁h)D_Z(g₁h)⁻¹ where Z collects the y in Y that
        are conjugates a0·y'·a0⁻¹ of some y' in Y'.
        """
        self._require_dyer()
        for subgroup in (first, second):
            self._check(subgroup.conjugator)
        a = first.conjugator.inverse() * second.conjugator
        split = self.min_double_coset_rep(first.generators, a, second.generators)
        conjugates = {self.reducer.generator(y).conjugate(split.representative).word for y in second.generators}
        common = {y for y in first.generators if (Syllable(y, 1),) in conjugates}
        return self.parabolic(first.conjugator * split.left, common)

    def contains(self, subgroup: ParabolicSubgroup, element: GroupElement) -> bool:
        self._require_property_d()
        self._check(element)
        conjugator = subgroup.conjugator
        return element.conjugate(conjugator.inverse()).support() <= subgroup.generators

    def leq(self, first: ParabolicSubgroup, second: ParabolicSubgroup) -> bool:
        """
        :return: True iff the first subgroup is contained in the second
        """
        self._require_dyer()
        return all(self.contains(second, self.reducer.generator(y).conjugate(first.conjugator))
                   for y in first.generators)

    def equivalent(self, first: ParabolicSubgroup, second: ParabolicSubgroup) -> bool:
        return self.leq(first, second) and self.leq(second, first)

    @staticmethod
    def rank(subgroup: ParabolicSubgroup) -> int:
        return len(subgroup.generators)

    def enumerate_parabolics(self) -> List[Tuple[ParabolicSubgroup, FrozenSet[GroupElement]]]:
        """
        Every parabolic subgroup of a finite group together with its element set, one entry per
        distinct subgroup.
        """
        self._require_dyer()
        if self._parabolics is not None:
            return self._parabolics
        elements = enumerate_group(self.reducer, self.max_enumeration)
        vertices = self.presentation.vertices
        found = {}
        for size in range(len(vertices) + 1):
            for generators in combinations(vertices, size):
                generators = frozenset(generators)
                standard = [e for e in elements if e.support() <= generators]
                for g in elements:
                    members = frozenset(d.conjugate(g) for d in standard)
                    if members not in found:
                        found[members] = self.parabolic(g, generators)
        self._parabolics = [(subgroup, members) for members, subgroup in found.items()]
        return self._parabolics

    def parabolic_closure(self, elements: Sequence[GroupElement], mode: ClosureMode,
                          family: Optional[Sequence[ParabolicSubgroup]] = None) -> ParabolicSubgroup:
        """
        The smallest parabolic subgroup containing the elements.

        :param elements: the set A
        :param mode: FOLD intersects the given family, ENUMERATE searches all parabolics of a
                     finite group
        :param family: parabolic subgroups containing A, used by FOLD; an empty family gives the
                       whole group
        :return: the closure
        """
        self._require_dyer()
        for element in elements:
            self._check(element)

        if mode is ClosureMode.FOLD:
            if family is None:
                raise ParabolicError("Fold mode needs a family of parabolic subgroups")
            result = self.standard(self.presentation.vertices)
            for subgroup in family:
                if not all(self.contains(subgroup, element) for element in elements):
                    raise ParabolicError("Every member of the family must contain all the elements")
                result = self.intersect(result, subgroup)
            return result

        containing = [(subgroup, members) for subgroup, members in self.enumerate_parabolics()
                      if all(element in members for element in elements)]
        subgroup, members = min(containing, key=lambda candidate: len(candidate[1]))
        if not all(members <= other for _, other in containing):
            raise ParabolicError("The smallest parabolic subgroup containing the elements is not unique")
        return subgroup

    def _strippable(self, word: SyllabicWord, generators: FrozenSet[str], side: Side) -> Optional[SyllabicWord]:
        if not word or not generators:
            return None
        for member in sorted(self.reducer.type2_orbit(word), key=self.reducer.sort_key):
            s = member[-1] if side is Side.LEFT else member[0]
            if s.vertex in generators:
                return member
        return None

    def _vertices(self, generators: Iterable[str]) -> FrozenSet[str]:
        generators = frozenset(generators)
        for vertex in generators:
            if vertex not in self.presentation:
                raise UnknownVertexError(f"Unknown vertex '{vertex}'")
        return generators

    def _check(self, element: GroupElement) -> None:
        if element.reducer is not self.reducer and element.presentation != self.presentation:
            raise PresentationMismatchError("The element belongs to another presentation")

    def _require_dyer(self) -> None:
        if not self.presentation.is_dyer():
            raise ParabolicError(f"This operation needs a Dyer presentation, this one is "
                                 f"{self.reducer.presentation_class.value}")

    def _require_property_d(self) -> None:
        if not self.presentation.property_d_known():
            raise ParabolicError(f"Membership needs a Dyer or QD_(m,k) presentation, this one is "
                                 f"{self.reducer.presentation_class.value}")


class ParabolicError(Exception):
    """
    The error will be raised when a parabolic subgroup computation can't be carried out
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text
