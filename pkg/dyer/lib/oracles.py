"""
This module provides ground truth for the word problem engine: faithful permutation and integer
matrix models of small catalog groups, breadth-first Cayley graph enumeration over the syllable
generating set, and the amalgamated product normal form of QD_(m,k) = D_m *_K C_(2k).
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from dyer.lib.presentation import INFINITY, Presentation, quasi_dyer_pair
from dyer.lib.reducer import BudgetExceededError, GroupElement, Reducer
from dyer.lib.syllabic import Syllable, SyllabicWord, alternating_word, format_word, syllables

DEFAULT_MAX_ENUMERATION = 100_000

Key = Tuple[int, ...]


class GroupModel:
    """
    A faithful representation of a group given by images of its generators. Words are evaluated
    left to right, the image of (s_1, ..., s_l) being the product of the images of the syllables.
    """
    finite = True

    def __init__(self, presentation: Presentation, images: Dict[str, np.ndarray]):
        missing = [vertex for vertex in presentation.vertices if vertex not in images]
        if missing:
            raise ModelError(f"No image given for vertices {', '.join(missing)}")
        self.presentation = presentation
        self._images = images
        self._powers: Dict[Syllable, np.ndarray] = {}
        self._identity = self._make_identity()
        self._check_relations()

    def _make_identity(self) -> np.ndarray:
        raise NotImplementedError

    def compose(self, first: np.ndarray, second: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def invert(self, image: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def key(self, image: np.ndarray) -> Key:
        return tuple(image.flatten().tolist())

    def image(self, s: Syllable) -> np.ndarray:
        cached = self._powers.get(s)
        if cached is None:
            base = self._images[s.vertex]
            if s.exponent < 0:
                base = self.invert(base)
            cached = self._raw_power(base, abs(s.exponent))
            self._powers[s] = cached
        return cached

    def evaluate(self, word: SyllabicWord) -> Key:
        return self.key(self._product(word))

    def equal(self, first: SyllabicWord, second: SyllabicWord) -> bool:
        return self.evaluate(first) == self.evaluate(second)

    def distances(self, radius: Optional[int] = None) -> Dict[Key, int]:
        """
        Breadth-first distances from the identity in the Cayley graph over the syllables.

        :param radius: stop after this distance; required for infinite models
        :return: element key -> syllabic length
        """
        if radius is None and not self.finite:
            raise NotFiniteError("The model is infinite, a radius is needed")
        generators = [self.image(s) for s in syllables(self.presentation)]
        start = self.key(self._identity)
        found = {start: 0}
        queue = deque([(self._identity, 0)])
        while queue:
            current, distance = queue.popleft()
            if radius is not None and distance >= radius:
                continue
            for generator in generators:
                result = self.compose(current, generator)
                result_key = self.key(result)
                if result_key not in found:
                    found[result_key] = distance + 1
                    queue.append((result, distance + 1))
        return found

    def length(self, word: SyllabicWord) -> int:
        target = self.evaluate(word)
        return self.distances(radius=len(word))[target]

    def order(self) -> int:
        return len(self.distances())

    def closure(self, words: Iterable[SyllabicWord]) -> FrozenSet[Key]:
        """
        Element keys of the subgroup generated by the given words; the subgroup must be finite.
        """
        generators = [self._product(word) for word in words]
        found = {self.key(self._identity)}
        queue = deque([self._identity])
        while queue:
            current = queue.popleft()
            for generator in generators:
                result = self.compose(current, generator)
                result_key = self.key(result)
                if result_key not in found:
                    if len(found) >= DEFAULT_MAX_ENUMERATION:
                        raise NotFiniteError("The generated subgroup exceeds the enumeration limit")
                    found.add(result_key)
                    queue.append(result)
        return frozenset(found)

    def _product(self, word: SyllabicWord) -> np.ndarray:
        result = self._identity
        for s in word:
            result = self.compose(result, self.image(s))
        return result

    def _raw_power(self, image: np.ndarray, exponent: int) -> np.ndarray:
        result = self._identity
        for _ in range(exponent):
            result = self.compose(result, image)
        return result

    def _is_identity(self, image: np.ndarray) -> bool:
        return np.array_equal(image, self._identity)

    def _check_relations(self) -> None:
        for vertex in self.presentation.vertices:
            order = self.presentation.order(vertex)
            image = self._images[vertex]
            if order == INFINITY:
                continue
            powers = [self._raw_power(image, n) for n in range(1, order + 1)]
            if not self._is_identity(powers[-1]) or any(self._is_identity(p) for p in powers[:-1]):
                raise ModelError(f"Image of '{vertex}' doesn't have order {order}")

        for u, v, m in self.presentation.edges():
            exponents = (1, 1) if m == 2 else (self.presentation.order(u) // 2, self.presentation.order(v) // 2)
            s, t = Syllable(u, exponents[0]), Syllable(v, exponents[1])
            if not self._is_identity(self.compose(self._product(alternating_word(s, t, m)),
                                                  self.invert(self._product(alternating_word(t, s, m))))):
                raise ModelError(f"Braid relation of length {m} fails between '{u}' and '{v}'")


class PermGroupModel(GroupModel):
    """
    Generators act as permutations of {0, ..., degree - 1}; composition is p[q], that is p after q.
    """

    def __init__(self, presentation: Presentation, generator_images: Dict[str, Sequence[int]]):
        images = {vertex: np.array(image, dtype=np.int64) for vertex, image in generator_images.items()}
        degrees = {len(image) for image in images.values()}
        if len(degrees) > 1:
            raise ModelError("All permutations must have the same degree")
        self.degree = degrees.pop() if degrees else 1
        for vertex, image in images.items():
            if sorted(image.tolist()) != list(range(self.degree)):
                raise ModelError(f"Image of '{vertex}' is not a permutation of 0..{self.degree - 1}")
        super().__init__(presentation, images)

    def _make_identity(self) -> np.ndarray:
        return np.arange(self.degree, dtype=np.int64)

    def compose(self, first: np.ndarray, second: np.ndarray) -> np.ndarray:
        return first[second]

    def invert(self, image: np.ndarray) -> np.ndarray:
        return np.argsort(image)


class MatrixGroupModel(GroupModel):
    """
    Generators act as invertible integer matrices; composition is the matrix product.
    """

    def __init__(self, presentation: Presentation, generator_images: Dict[str, Sequence[Sequence[int]]],
                 finite: bool = False):
        images = {vertex: np.array(image, dtype=np.int64) for vertex, image in generator_images.items()}
        shapes = {image.shape for image in images.values()}
        if len(shapes) != 1 or any(len(shape) != 2 or shape[0] != shape[1] for shape in shapes):
            raise ModelError("All images must be square matrices of the same size")
        self.dimension = shapes.pop()[0]
        self.finite = finite
        super().__init__(presentation, images)

    def _make_identity(self) -> np.ndarray:
        return np.eye(self.dimension, dtype=np.int64)

    def compose(self, first: np.ndarray, second: np.ndarray) -> np.ndarray:
        return first @ second

    def invert(self, image: np.ndarray) -> np.ndarray:
        return np.rint(np.linalg.inv(image)).astype(np.int64)


class CatalogEntry(NamedTuple):
    name: str
    presentation: Presentation
    model: GroupModel


def oracle_equal(model: GroupModel, first: SyllabicWord, second: SyllabicWord) -> bool:
    return model.equal(first, second)


def oracle_length(model: GroupModel, presentation: Presentation, element: Union[GroupElement, SyllabicWord]) -> int:
    """
    :return: distance from the identity to the element in the Cayley graph over all syllables
    """
    if presentation != model.presentation:
        raise ModelError("The model represents another presentation")
    word = element.word if isinstance(element, GroupElement) else tuple(element)
    return model.length(word)


def catalog() -> List[CatalogEntry]:
    """
    Small groups with faithful models: dihedral I2(m), A1×A1, cyclic groups, A3, I2(3)×Z4 and the
    graph product on the path with orders (2, 3, 2), which is Z3 × D∞ and gets a matrix model.
    """
    entries = [_dihedral(m) for m in (3, 4, 5, 6)]
    presentation = Presentation([('x', 2), ('y', 2)], [('x', 'y', 2)])
    entries.append(CatalogEntry('A1xA1', presentation, PermGroupModel(presentation, {
        'x': [1, 0, 2, 3], 'y': [0, 1, 3, 2]})))

    for order in range(2, 9):
        presentation = Presentation([('v', order)])
        entries.append(CatalogEntry(f'Z{order}', presentation,
                                    PermGroupModel(presentation, {'v': _cycle(order)})))

    presentation = Presentation([('x', 2), ('y', 2), ('z', 2)], [('x', 'y', 3), ('y', 'z', 3), ('x', 'z', 2)])
    entries.append(CatalogEntry('A3', presentation, PermGroupModel(presentation, {
        'x': [1, 0, 2, 3], 'y': [0, 2, 1, 3], 'z': [0, 1, 3, 2]})))

    presentation = Presentation([('x', 2), ('y', 2), ('v', 4)], [('x', 'y', 3), ('x', 'v', 2), ('y', 'v', 2)])
    entries.append(CatalogEntry('I2(3)xZ4', presentation, PermGroupModel(presentation, {
        'x': [0, 2, 1, 3, 4, 5, 6], 'y': [1, 0, 2, 3, 4, 5, 6], 'v': [0, 1, 2, 4, 5, 6, 3]})))

    presentation = Presentation([('a', 2), ('b', 3), ('c', 2)], [('a', 'b', 2), ('b', 'c', 2)])
    rotation = np.roll(np.eye(3, dtype=np.int64), 1, axis=0)
    entries.append(CatalogEntry('path(2,3,2)', presentation, MatrixGroupModel(presentation, {
        'a': _block([[-1, 0], [0, 1]], np.eye(3, dtype=np.int64)),
        'b': _block(np.eye(2, dtype=np.int64), rotation),
        'c': _block([[-1, 1], [0, 1]], np.eye(3, dtype=np.int64))})))
    return entries


def infinite_reason(presentation: Presentation) -> Optional[str]:
    """
    Decides whether a Dyer or quasi-Dyer group is infinite. A finite one has every order finite and
    every pair of vertices joined, its edges of label m > 2 join two vertices of order 2, and the
    Coxeter group on the order-2 vertices has a positive definite cosine matrix.

    :return: why the group is infinite, or None for a finite group
    """
    infinite = [vertex for vertex in presentation.vertices if presentation.order(vertex) == INFINITY]
    if infinite:
        return f"Generators {', '.join(infinite)} have infinite order"
    if presentation.qd_parameters() is not None:
        return "QD_(m,k) is an amalgam of finite groups over a proper subgroup and is infinite"

    vertices = presentation.vertices
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            m = presentation.edge_label(u, v)
            if m is None:
                return f"Vertices {u} and {v} are not joined, they generate a free product"
            if m > 2 and (presentation.order(u) != 2 or presentation.order(v) != 2):
                return f"Vertices {u} and {v} generate an infinite QD_(m,k) subgroup"

    involutions = [vertex for vertex in vertices if presentation.order(vertex) == 2]
    if len(involutions) < 3:
        return None
    cosines = np.eye(len(involutions))
    for i, u in enumerate(involutions):
        for j, v in enumerate(involutions[:i]):
            cosines[i, j] = cosines[j, i] = -np.cos(np.pi / presentation.edge_label(u, v))
    if np.linalg.eigvalsh(cosines).min() <= 1e-9:
        return f"The Coxeter group on {', '.join(involutions)} is not spherical"
    return None


def enumerate_group(reducer: Reducer, max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> List[GroupElement]:
    """
    Breadth-first enumeration of a finite group from the identity, multiplying by syllables and
    keeping normal forms as visited keys.

    :param reducer: reducer of the presentation
    :param max_enumeration: largest number of elements allowed
    :return: every element exactly once, shortest first
    """
    presentation = reducer.presentation
    reason = infinite_reason(presentation)
    if reason is not None:
        raise NotFiniteError(reason)

    generators = [reducer.normal_form((s,)) for s in syllables(presentation)]
    identity = reducer.identity()
    seen = {identity}
    elements = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            result = current * generator
            if result in seen:
                continue
            seen.add(result)
            if len(seen) > max_enumeration:
                raise BudgetExceededError(f"The group has more than {max_enumeration} elements "
                                          f"(max_enumeration), it may be infinite")
            elements.append(result)
            queue.append(result)
    return elements


@dataclass(frozen=True)
class AmalgamElement:
    """
    Normal form z^k_part · t_1 ⋯ t_n in D_m *_K C_(2k): k_part in {0, 1} selects the element of K,
    each t_i is a nontrivial transversal representative tagged 'D' or 'C', tags alternate.
    """
    k_part: int
    factors: Tuple[Tuple[str, object], ...]


class QuasiDyerAmalgam:
    """
    QD_(m,k) as the amalgam of the dihedral group D_m = <x, y'> and the cyclic group C_(2k) = <y>
    over K = {1, z}, z mapping to y' and to y^k. Dihedral elements are affine maps i -> sign·i + shift
    of Z_m with x = (-1, 0) and y' = (-1, 1). Each right coset Kt is represented by its member with
    the glex-least word (over x < y' in D_m, over y < y² < ... in C_(2k)).
    """

    def __init__(self, m: int, k: int, x: str = 'x', y: str = 'y'):
        if m < 3 or m % 2 == 0 or k < 2:
            raise ModelError(f"QD_(m,k) needs odd m >= 3 and k >= 2, got m={m}, k={k}")
        self.m, self.k, self.x, self.y = m, k, x, y
        self.presentation = quasi_dyer_pair(m, k, x, y)
        self._dihedral_rank = self._rank_dihedral()

    def normal_form(self, word: SyllabicWord) -> AmalgamElement:
        factors = []
        for s in word:
            if s.vertex == self.x:
                factors.append(('D', (-1, 0) if s.exponent % 2 else (1, 0)))
            elif s.vertex == self.y:
                factors.append(('C', s.exponent % (2 * self.k)))
            else:
                raise ModelError(f"Unknown vertex '{s.vertex}' in '{format_word(word)}'")
        factors = self._merge(factors)

        carry = 0
        representatives = []
        for tag, element in reversed(factors):
            carry, representative = self._split(tag, self._multiply(tag, element, self._from_k(tag, carry)))
            if not self._is_identity(tag, representative):
                representatives.append((tag, representative))
        return AmalgamElement(carry, tuple(reversed(representatives)))

    def equal(self, first: SyllabicWord, second: SyllabicWord) -> bool:
        return self.normal_form(first) == self.normal_form(second)

    def strongly_marked_violations(self) -> List[Tuple[Syllable, Syllable]]:
        """
        Pairs (s, t) of syllables on distinct generators whose product is a syllable or trivial.
        """
        letters = syllables(self.presentation)
        short = {self.normal_form(()): None}
        short.update({self.normal_form((s,)): s for s in letters})
        return [(s, t) for s in letters for t in letters
                if s.vertex != t.vertex and self.normal_form((s, t)) in short]

    def _merge(self, factors: List[Tuple[str, object]]) -> List[Tuple[str, object]]:
        changed = True
        while changed:
            changed = False
            merged = []
            for tag, element in factors:
                if self._is_identity(tag, element):
                    changed = True
                    continue
                if merged and merged[-1][0] == tag:
                    merged[-1] = (tag, self._multiply(tag, merged[-1][1], element))
                    changed = True
                    continue
                merged.append((tag, element))
            factors = merged

            if len(factors) > 1:
                for i, (tag, element) in enumerate(factors):
                    bit = self._k_bit(tag, element)
                    if bit is None:
                        continue
                    if i > 0:
                        left_tag, left = factors[i - 1]
                        factors[i - 1] = (left_tag, self._multiply(left_tag, left, self._from_k(left_tag, bit)))
                    else:
                        right_tag, right = factors[1]
                        factors[1] = (right_tag, self._multiply(right_tag, self._from_k(right_tag, bit), right))
                    del factors[i]
                    changed = True
                    break
        return factors

    def _split(self, tag: str, element) -> Tuple[int, object]:
        """
        :return: (bit, t) with element = z^bit · t and t the representative of K·element
        """
        shifted = self._multiply(tag, self._from_k(tag, 1), element)
        if self._rank(tag, element) <= self._rank(tag, shifted):
            return 0, element
        return 1, shifted

    def _multiply(self, tag: str, first, second):
        if tag == 'C':
            return (first + second) % (2 * self.k)
        (sign1, shift1), (sign2, shift2) = first, second
        return sign1 * sign2, (sign1 * shift2 + shift1) % self.m

    def _from_k(self, tag: str, bit: int):
        if tag == 'C':
            return self.k * bit
        return (-1, 1) if bit else (1, 0)

    def _k_bit(self, tag: str, element) -> Optional[int]:
        for bit in (0, 1):
            if element == self._from_k(tag, bit):
                return bit
        return None

    def _is_identity(self, tag: str, element) -> bool:
        return element == self._from_k(tag, 0)

    def _rank(self, tag: str, element) -> tuple:
        if tag == 'C':
            return (0, 0) if element == 0 else (1, element)
        return self._dihedral_rank[element]

    def _rank_dihedral(self) -> Dict[Tuple[int, int], tuple]:
        reflections = [(-1, 0), (-1, 1)]
        ranks = {(1, 0): (0, ())}
        queue = deque([((1, 0), ())])
        while queue:
            element, word = queue.popleft()
            for letter, reflection in enumerate(reflections):
                result = self._multiply('D', element, reflection)
                if result not in ranks:
                    ranks[result] = (len(word) + 1, word + (letter,))
                    queue.append((result, word + (letter,)))
        return ranks


@lru_cache(maxsize=None)
def _amalgam(m: int, k: int) -> QuasiDyerAmalgam:
    return QuasiDyerAmalgam(m, k)


def amalgam_normal_form(m: int, k: int, word: SyllabicWord) -> AmalgamElement:
    """
    Normal form of a word over vertices x and y in QD_(m,k).
    """
    return _amalgam(m, k).normal_form(word)


def _dihedral(m: int) -> CatalogEntry:
    presentation = Presentation([('x', 2), ('y', 2)], [('x', 'y', m)])
    return CatalogEntry(f'I2({m})', presentation, PermGroupModel(presentation, {
        'x': [(-i) % m for i in range(m)],
        'y': [(1 - i) % m for i in range(m)]}))


def _cycle(order: int) -> List[int]:
    return [(i + 1) % order for i in range(order)]


def _block(upper, lower) -> np.ndarray:
    upper, lower = np.asarray(upper, dtype=np.int64), np.asarray(lower, dtype=np.int64)
    result = np.zeros((upper.shape[0] + lower.shape[0],) * 2, dtype=np.int64)
    result[:upper.shape[0], :upper.shape[0]] = upper
    result[upper.shape[0]:, upper.shape[0]:] = lower
    return result


class ModelError(Exception):
    """
    The error will be raised when a model doesn't represent its presentation
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class NotFiniteError(Exception):
    """
    The error will be raised when a finite group is required and the group is infinite
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text
