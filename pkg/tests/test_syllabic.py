"""
Tests for dyer/lib/syllabic.py module
"""
import random
import unittest

from dyer.lib.oracles import catalog
from dyer.lib.presentation import INFINITY, Presentation, UnknownVertexError, quasi_dyer_pair
from dyer.lib.syllabic import (MOperation, MoveKind, Syllable, SyllableError, alternating_word, apply_move,
                               braid_degree, enumerate_moves, format_word, generator, inverse_word,
                               merge_syllables, parse_word, syllable, syllables)


class SyllableTest(unittest.TestCase):
    def setUp(self):
        self.qd = quasi_dyer_pair(3, 2)
        self.free = Presentation([('v', INFINITY)])

    def test_canonical_exponent(self):
        self.assertEqual(syllable(self.qd, 'y', -1), Syllable('y', 3))
        self.assertEqual(syllable(self.qd, 'y', 6), Syllable('y', 2))
        self.assertEqual(syllable(self.free, 'v', -5), Syllable('v', -5))
        self.assertEqual(generator(self.qd, 'x'), Syllable('x', 1))
        with self.assertRaises(SyllableError):
            syllable(self.qd, 'y', 4)
        with self.assertRaises(SyllableError):
            syllable(self.free, 'v', 0)

    def test_merge_syllables(self):
        y = lambda a: Syllable('y', a)
        self.assertIsNone(merge_syllables(self.qd, y(1), y(3)))
        self.assertEqual(merge_syllables(self.qd, y(1), y(2)), y(3))
        self.assertEqual(merge_syllables(self.qd, y(3), y(3)), y(2))
        self.assertIsNone(merge_syllables(self.free, Syllable('v', 2), Syllable('v', -2)))
        self.assertEqual(merge_syllables(self.free, Syllable('v', 2), Syllable('v', 5)), Syllable('v', 7))
        with self.assertRaises(SyllableError):
            merge_syllables(self.qd, Syllable('x', 1), y(1))

    def test_braid_degree(self):
        x, y = Syllable('x', 1), lambda a: Syllable('y', a)
        self.assertEqual(braid_degree(self.qd, x, y(2)), 3)
        self.assertIsNone(braid_degree(self.qd, x, y(1)))
        self.assertIsNone(braid_degree(self.qd, x, y(3)))

        raag = Presentation([('u', INFINITY), ('v', INFINITY), ('w', INFINITY)], [('u', 'v', 2)])
        self.assertEqual(braid_degree(raag, Syllable('u', 5), Syllable('v', -3)), 2)
        # No edge, no relation
        self.assertIsNone(braid_degree(raag, Syllable('u', 1), Syllable('w', 1)))
        with self.assertRaises(SyllableError):
            braid_degree(raag, Syllable('u', 1), Syllable('u', 2))

    def test_braid_degree_symmetric(self):
        presentations = [entry.presentation for entry in catalog()] + [quasi_dyer_pair(3, 2), quasi_dyer_pair(5, 3)]
        for presentation in presentations:
            letters = syllables(presentation)
            for s in letters:
                for t in letters:
                    if s.vertex != t.vertex:
                        self.assertEqual(braid_degree(presentation, s, t), braid_degree(presentation, t, s))

    def test_alternating_word(self):
        s, t = Syllable('x', 1), Syllable('y', 2)
        self.assertEqual(alternating_word(s, t, 3), (s, t, s))
        self.assertEqual(alternating_word(s, t, 1), (s,))
        self.assertEqual(alternating_word(s, t, 2), (s, t))
        with self.assertRaises(SyllableError):
            alternating_word(s, t, 0)

    def test_syllables(self):
        self.assertEqual(format_word(syllables(self.qd)), 'x y y^2 y^3')
        with self.assertRaises(SyllableError):
            syllables(self.free)


class WordTest(unittest.TestCase):
    def setUp(self):
        self.qd = quasi_dyer_pair(3, 2)

    def test_parse_word(self):
        self.assertEqual(parse_word(self.qd, 'y x^-2 y^3'), (Syllable('y', 1), Syllable('y', 3)))
        self.assertEqual(parse_word(self.qd, 'y^2 x^-1'), (Syllable('y', 2), Syllable('x', 1)))
        self.assertEqual(parse_word(self.qd, ''), ())
        self.assertEqual(parse_word(self.qd, '  '), ())

    def test_parse_word_incorrect(self):
        with self.assertRaises(SyllableError):
            parse_word(self.qd, 'x^0')
        with self.assertRaises(SyllableError):
            parse_word(self.qd, 'x^')
        with self.assertRaises(SyllableError):
            parse_word(self.qd, 'x*y')
        with self.assertRaises(UnknownVertexError):
            parse_word(self.qd, 'z')

    def test_format_word(self):
        word = parse_word(self.qd, 'x y^2 x y^3')
        self.assertEqual(format_word(word), 'x y^2 x y^3')
        self.assertEqual(parse_word(self.qd, format_word(word)), word)
        self.assertEqual(format_word(()), '')

    def test_inverse_word(self):
        word = parse_word(self.qd, 'y x y^2')
        self.assertEqual(inverse_word(self.qd, word), parse_word(self.qd, 'y^2 x y^3'))


class MovesTest(unittest.TestCase):
    def setUp(self):
        self.qd = quasi_dyer_pair(3, 2)
        self.coxeter = Presentation([('x', 2)])

    def test_enumerate_moves(self):
        moves = enumerate_moves(self.coxeter, parse_word(self.coxeter, 'x x'))
        self.assertEqual(moves, [(MOperation(MoveKind.CANCEL, 0, 2), ())])

        moves = enumerate_moves(self.qd, parse_word(self.qd, 'x y^2 x'))
        self.assertEqual(moves, [(MOperation(MoveKind.BRAID, 0, 3), parse_word(self.qd, 'y^2 x y^2'))])

        self.assertEqual(enumerate_moves(self.qd, parse_word(self.qd, 'x')), [])

        moves = enumerate_moves(self.qd, parse_word(self.qd, 'y y x'))
        self.assertEqual(moves, [(MOperation(MoveKind.MERGE, 0, 2), parse_word(self.qd, 'y^2 x'))])

    def test_enumerate_moves_incorrect(self):
        with self.assertRaises(SyllableError):
            enumerate_moves(self.qd, (Syllable('y', 5),))
        with self.assertRaises(SyllableError):
            enumerate_moves(self.qd, ('x',))

    def test_apply_move(self):
        word = parse_word(self.qd, 'y x y^2 x y^2')
        for operation, result in enumerate_moves(self.qd, word):
            self.assertEqual(apply_move(self.qd, word, operation), result)
        with self.assertRaises(SyllableError):
            apply_move(self.qd, word, MOperation(MoveKind.CANCEL, 0, 2))

    def test_moves_preserve_element(self):
        rng = random.Random(7)
        for entry in catalog():
            letters = syllables(entry.presentation)
            for _ in range(200):
                word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))
                for operation, result in enumerate_moves(entry.presentation, word):
                    self.assertTrue(entry.model.equal(word, result), (entry.name, word, operation))
                    if operation.kind is MoveKind.BRAID:
                        self.assertEqual(len(result), len(word))
                        self.assertLessEqual(set(result), set(word))
                    elif operation.kind is MoveKind.MERGE:
                        self.assertEqual(len(result), len(word) - 1)
                    else:
                        self.assertEqual(len(result), len(word) - 2)


if __name__ == '__main__':
    unittest.main()
