"""
Tests for dyer/lib/oracles.py module
"""
import itertools
import random
import unittest

from dyer.lib.oracles import (AmalgamElement, ModelError, NotFiniteError, PermGroupModel, QuasiDyerAmalgam,
                              amalgam_normal_form, catalog, enumerate_group, infinite_reason, oracle_equal,
                              oracle_length)
from dyer.lib.presentation import INFINITY, Presentation, quasi_dyer_pair
from dyer.lib.reducer import BudgetExceededError, Reducer
from dyer.lib.rewriting import word_problem_qd
from dyer.lib.syllabic import Syllable, alternating_word, inverse_word, parse_word, syllables

# Longest words compared exhaustively
EXHAUSTIVE_LENGTH = 6


def entries():
    return {entry.name: entry for entry in catalog()}


class GroupModelTest(unittest.TestCase):
    def setUp(self):
        self.entries = entries()

    def test_catalog_orders(self):
        for m in (3, 4, 5, 6):
            self.assertEqual(self.entries[f'I2({m})'].model.order(), 2 * m)
        for n in range(2, 9):
            self.assertEqual(self.entries[f'Z{n}'].model.order(), n)
        self.assertEqual(self.entries['A1xA1'].model.order(), 4)
        self.assertEqual(self.entries['A3'].model.order(), 24)
        self.assertEqual(self.entries['I2(3)xZ4'].model.order(), 24)

        path = self.entries['path(2,3,2)'].model
        self.assertFalse(path.finite)
        with self.assertRaises(NotFiniteError):
            path.order()
        self.assertLess(len(path.distances(radius=4)), len(path.distances(radius=6)))

    def test_incorrect_model(self):
        a2 = Presentation([('x', 2), ('y', 2)], [('x', 'y', 3)])
        with self.assertRaises(ModelError):
            PermGroupModel(a2, {'x': [1, 0, 2]})
        with self.assertRaises(ModelError):
            PermGroupModel(a2, {'x': [1, 0, 2], 'y': [0, 1, 2]})
        with self.assertRaises(ModelError):
            PermGroupModel(a2, {'x': [1, 0, 2, 3], 'y': [0, 1, 3, 2]})
        with self.assertRaises(ModelError):
            PermGroupModel(a2, {'x': [1, 1, 2], 'y': [0, 2, 1]})
        with self.assertRaises(ModelError):
            PermGroupModel(a2, {'x': [1, 0, 2], 'y': [0, 2, 1, 3]})

    def test_oracle_equal_length(self):
        entry = self.entries['I2(3)']
        presentation, model = entry.presentation, entry.model
        self.assertTrue(oracle_equal(model, parse_word(presentation, 'x y x'), parse_word(presentation, 'y x y')))
        self.assertFalse(oracle_equal(model, parse_word(presentation, 'x y'), parse_word(presentation, 'y x')))
        self.assertEqual(oracle_length(model, presentation, ()), 0)
        self.assertEqual(oracle_length(model, presentation, parse_word(presentation, 'x y x')), 3)
        self.assertEqual(oracle_length(model, presentation, Reducer(presentation).parse('x y x y')), 2)

        with self.assertRaises(ModelError):
            oracle_length(model, self.entries['A3'].presentation, ())

    def test_closure(self):
        entry = self.entries['I2(3)']
        x, y = parse_word(entry.presentation, 'x'), parse_word(entry.presentation, 'y')
        self.assertEqual(len(entry.model.closure([])), 1)
        self.assertEqual(len(entry.model.closure([x])), 2)
        self.assertEqual(len(entry.model.closure([x, y])), 6)

        path = self.entries['path(2,3,2)']
        self.assertEqual(len(path.model.closure([parse_word(path.presentation, 'b')])), 3)
        self.assertEqual(len(path.model.closure([parse_word(path.presentation, 'a b')])), 6)


class ReducerAgreementTest(unittest.TestCase):
    def test_equal_agrees_exhaustively(self):
        for entry in catalog():
            reducer = Reducer(entry.presentation)
            letters = syllables(entry.presentation)
            bound = EXHAUSTIVE_LENGTH if len(letters) > 2 else EXHAUSTIVE_LENGTH + 2
            by_key, by_normal_form = {}, {}
            for length in range(bound + 1):
                for word in itertools.product(letters, repeat=length):
                    key, normal_form = entry.model.evaluate(word), reducer.normal_form(word)
                    self.assertEqual(by_key.setdefault(key, normal_form), normal_form, (entry.name, word))
                    self.assertEqual(by_normal_form.setdefault(normal_form, key), key, (entry.name, word))

    def test_length_agrees(self):
        for entry in catalog():
            if not entry.model.finite:
                continue
            distances = entry.model.distances()
            elements = enumerate_group(Reducer(entry.presentation))
            self.assertEqual(len(elements), len(distances), entry.name)
            keys = set()
            for element in elements:
                key = entry.model.evaluate(element.word)
                keys.add(key)
                self.assertEqual(len(element), distances[key], (entry.name, str(element)))
            self.assertEqual(keys, set(distances))

    def test_length_agrees_on_infinite_model(self):
        entry = entries()['path(2,3,2)']
        reducer = Reducer(entry.presentation)
        letters = syllables(entry.presentation)
        ball = entry.model.distances(radius=6)
        rng = random.Random(6)
        for _ in range(500):
            word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 6)))
            self.assertEqual(reducer.length(word), ball[entry.model.evaluate(word)], word)
            other = tuple(rng.choice(letters) for _ in range(rng.randint(0, 6)))
            self.assertEqual(reducer.equal(word, other), entry.model.equal(word, other), (word, other))


class EnumerateGroupTest(unittest.TestCase):
    def test_enumerate_group(self):
        a3 = entries()['A3'].presentation
        elements = enumerate_group(Reducer(a3))
        self.assertEqual(len(elements), 24)
        self.assertEqual(len(set(elements)), 24)
        self.assertTrue(elements[0].is_identity())
        self.assertEqual([len(g) for g in elements], sorted(len(g) for g in elements))
        self.assertEqual(max(len(g) for g in elements), 6)

    def test_not_finite(self):
        with self.assertRaises(NotFiniteError):
            enumerate_group(Reducer(quasi_dyer_pair(3, 2)))
        with self.assertRaises(NotFiniteError):
            enumerate_group(Reducer(Presentation([('a', INFINITY), ('b', INFINITY)])))

        # Every order is finite but the groups are infinite
        infinite_dihedral = Presentation([('x', 2), ('y', 2)])
        affine = Presentation([('a', 2), ('b', 2), ('c', 2)], [('a', 'b', 3), ('b', 'c', 3), ('a', 'c', 3)])
        free_product = Presentation([('u', 3), ('v', 2)])
        for presentation in (infinite_dihedral, affine, free_product, entries()['path(2,3,2)'].presentation):
            with self.assertRaises(NotFiniteError):
                enumerate_group(Reducer(presentation))

    def test_infinite_reason(self):
        for entry in catalog():
            self.assertEqual(infinite_reason(entry.presentation) is None, entry.model.finite, entry.name)
        h3 = Presentation([('a', 2), ('b', 2), ('c', 2)], [('a', 'b', 5), ('b', 'c', 3), ('a', 'c', 2)])
        self.assertIsNone(infinite_reason(h3))
        self.assertEqual(len(enumerate_group(Reducer(h3))), 120)
        b3_tilde = Presentation([('a', 2), ('b', 2), ('c', 2)], [('a', 'b', 4), ('b', 'c', 4), ('a', 'c', 2)])
        self.assertIsNotNone(infinite_reason(b3_tilde))
        self.assertIsNotNone(infinite_reason(Presentation([('x', 2), ('y', 4), ('z', 2)],
                                                          [('x', 'y', 3), ('y', 'z', 2), ('x', 'z', 2)])))

    def test_budget_exceeded(self):
        with self.assertRaises(BudgetExceededError):
            enumerate_group(Reducer(entries()['A3'].presentation), max_enumeration=5)
        with self.assertRaises(BudgetExceededError):
            enumerate_group(Reducer(entries()['I2(6)'].presentation), max_enumeration=11)


class AmalgamTest(unittest.TestCase):
    def setUp(self):
        self.qd = quasi_dyer_pair(3, 2)
        self.amalgam = QuasiDyerAmalgam(3, 2)

    def test_normal_form(self):
        self.assertEqual(self.amalgam.normal_form(()), AmalgamElement(0, ()))
        self.assertEqual(self.amalgam.normal_form((Syllable('y', 2),)), AmalgamElement(1, ()))
        self.assertEqual(amalgam_normal_form(3, 2, parse_word(self.qd, 'x x')), AmalgamElement(0, ()))
        self.assertEqual(amalgam_normal_form(3, 2, parse_word(self.qd, 'y y^3')), AmalgamElement(0, ()))

        self.assertTrue(self.amalgam.equal(parse_word(self.qd, 'x y^2 x'), parse_word(self.qd, 'y^2 x y^2')))
        self.assertFalse(self.amalgam.equal(parse_word(self.qd, 'x y'), parse_word(self.qd, 'y x')))

        factors = self.amalgam.normal_form(parse_word(self.qd, 'x y x')).factors
        self.assertEqual([tag for tag, _ in factors], ['D', 'C', 'D'])

    def test_incorrect(self):
        with self.assertRaises(ModelError):
            QuasiDyerAmalgam(4, 2)
        with self.assertRaises(ModelError):
            self.amalgam.normal_form((Syllable('z', 1),))

    def test_strongly_marked(self):
        for m, k in ((3, 2), (5, 2), (3, 3)):
            self.assertEqual(QuasiDyerAmalgam(m, k).strongly_marked_violations(), [])

    def test_engines_agree(self):
        rng = random.Random(2718)
        for m, k in ((3, 2), (5, 2), (3, 3)):
            qd = quasi_dyer_pair(m, k)
            reducer = Reducer(qd)
            letters = syllables(qd)
            x, y = Syllable('x', 1), Syllable('y', k)
            # Trivial pieces inserted so that equal pairs show up often
            trivial = [(x, x), alternating_word(x, y, m) + inverse_word(qd, alternating_word(y, x, m))]
            for _ in range(1000):
                first = tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))
                second = tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))
                if rng.random() < 0.4:
                    position = rng.randint(0, len(first))
                    second = first[:position] + rng.choice(trivial) + first[position:]
                    self.assertEqual(amalgam_normal_form(m, k, first), amalgam_normal_form(m, k, second))
                expected = amalgam_normal_form(m, k, first) == amalgam_normal_form(m, k, second)
                self.assertEqual(word_problem_qd(m, k, first, second), expected, (m, k, first, second))
                self.assertEqual(reducer.equal(first, second), expected, (m, k, first, second))


if __name__ == '__main__':
    unittest.main()
