"""
This module implements string rewriting over a finite ordered alphabet: reduction to irreducible
words, critical pairs and their resolution, and the complete rewriting system of QD_(m,k).

Letters are strings (for QD_(m,k) they are the syllable tokens 'x', 'y', 'y^2', ...), words are
tuples of letters. Alphabets are listed from the greatest letter to the least, and words are
compared by the graded lexicographic order: longer words are greater, words of equal length are
compared letter by letter.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from dyer.lib.syllabic import Syllable, format_syllable

Word = Tuple[str, ...]
Redex = Tuple[int, int]

ARROW = '->'


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word

    def __str__(self) -> str:
        return f"{' '.join(self.lhs)} {ARROW} {' '.join(self.rhs)}".rstrip()


class PairKind(Enum):
    OVERLAP = 'overlap'
    INCLUSION = 'inclusion'


@dataclass(frozen=True)
class CriticalPair:
    """
    Overlap: u1·u2 -> v1 and u2·u3 -> v2 with u2 nonempty. Inclusion: u1·u2·u3 -> v1 and u2 -> v2.
    `first` and `second` are the indices of the two rules.
    """
    u1: Word
    u2: Word
    u3: Word
    v1: Word
    v2: Word
    kind: PairKind
    first: int
    second: int

    def branches(self) -> Tuple[Word, Word]:
        """
        :return: the two one-step reducts of the overlapping word
        """
        if self.kind is PairKind.OVERLAP:
            return self.v1 + self.u3, self.u1 + self.v2
        return self.v1, self.u1 + self.v2 + self.u3


class RewritingSystem:
    def __init__(self, alphabet: Sequence[str], rules: Iterable[Tuple[Sequence[str], Sequence[str]]]):
        """
        :param alphabet: letters from the greatest to the least
        :param rules: pairs (lhs, rhs) with lhs greater than rhs in the graded lexicographic order
        """
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise RewritingError("The alphabet contains a letter twice")
        self._rank = {letter: len(self.alphabet) - i for i, letter in enumerate(self.alphabet)}

        self.rules: List[Rule] = []
        for lhs, rhs in rules:
            rule = Rule(self.check_word(lhs), self.check_word(rhs))
            if not rule.lhs:
                raise RewritingError(f"Rule '{rule}' has an empty left-hand side")
            if self.glex_key(rule.lhs) <= self.glex_key(rule.rhs):
                raise RewritingError(f"Rule '{rule}' doesn't decrease the graded lexicographic order")
            self.rules.append(rule)

    def check_word(self, word: Iterable[Union[str, Syllable]]) -> Word:
        letters = tuple(format_syllable(letter) if isinstance(letter, Syllable) else letter for letter in word)
        for letter in letters:
            if letter not in self._rank:
                raise RewritingError(f"Letter '{letter}' is not in the alphabet")
        return letters

    def glex_key(self, word: Word) -> tuple:
        return len(word), tuple(self._rank[letter] for letter in word)

    def redexes(self, word: Word) -> List[Redex]:
        """
        :return: every (start position, rule index) where a left-hand side occurs in the word
        """
        found = []
        for i, rule in enumerate(self.rules):
            size = len(rule.lhs)
            for start in range(len(word) - size + 1):
                if word[start:start + size] == rule.lhs:
                    found.append((start, i))
        return found

    def rewrite(self, word: Word, redex: Redex) -> Word:
        start, i = redex
        rule = self.rules[i]
        return word[:start] + rule.rhs + word[start + len(rule.lhs):]

    def reduce_to_irreducible(self, word: Iterable[Union[str, Syllable]],
                              choose: Callable[[List[Redex]], Redex] = None) -> Word:
        """
        Rewrites until no rule applies.

        :param word: word over the alphabet
        :param choose: picks the redex to rewrite; by default the leftmost-innermost one, i.e. the
                       occurrence ending first, then the shortest left-hand side, then the rule
                       declared first
        :return: an irreducible word, unique when the system is confluent
        """
        word = self.check_word(word)
        choose = choose or self._leftmost_innermost
        while True:
            found = self.redexes(word)
            if not found:
                return word
            word = self.rewrite(word, choose(found))

    def _leftmost_innermost(self, found: List[Redex]) -> Redex:
        return min(found, key=lambda redex: (redex[0] + len(self.rules[redex[1]].lhs),
                                             len(self.rules[redex[1]].lhs), redex[1]))

    def critical_pairs(self) -> List[CriticalPair]:
        """
        All proper overlaps of two left-hand sides (a rule with itself included) and all inclusions
        of one left-hand side in another, except a rule inside itself.
        """
        pairs = []
        for i, first in enumerate(self.rules):
            for j, second in enumerate(self.rules):
                left, right = first.lhs, second.lhs
                for size in range(1, min(len(left), len(right))):
                    if left[-size:] == right[:size]:
                        pairs.append(CriticalPair(left[:-size], left[-size:], right[size:], first.rhs, second.rhs,
                                                  PairKind.OVERLAP, i, j))
                if i == j:
                    continue
                for start in range(len(left) - len(right) + 1):
                    if left[start:start + len(right)] == right:
                        pairs.append(CriticalPair(left[:start], right, left[start + len(right):], first.rhs,
                                                  second.rhs, PairKind.INCLUSION, i, j))
        return pairs

    def joining_word(self, pair: CriticalPair) -> Optional[Word]:
        """
        :return: the common irreducible form of both branches of the pair, None if they differ
        """
        first, second = (self.reduce_to_irreducible(branch) for branch in pair.branches())
        return first if first == second else None

    def is_resolved(self, pair: CriticalPair) -> bool:
        return self.joining_word(pair) is not None

    def unresolved_pairs(self) -> List[CriticalPair]:
        return [pair for pair in self.critical_pairs() if not self.is_resolved(pair)]

    def confluence_check(self) -> bool:
        return not self.unresolved_pairs()


def qd_letters(k: int) -> List[str]:
    """
    :return: ['x', 'y', 'y^2', ..., 'y^(2k-1)'], the greatest letter first
    """
    return ['x'] + [format_syllable(Syllable('y', a)) for a in range(1, 2 * k)]


@lru_cache(maxsize=None)
def qd_system(m: int, k: int) -> RewritingSystem:
    """
    The complete rewriting system of QD_(m,k): (x, x) -> ε, [x, y^k]_m -> [y^k, x]_m,
    (y^a, y^-a) -> ε and (y^a, y^b) -> (y^(a+b)) for a + b ≠ 0 modulo 2k.
    """
    if m < 3 or m % 2 == 0 or k < 2:
        raise RewritingError(f"QD_(m,k) needs odd m >= 3 and k >= 2, got m={m}, k={k}")
    letters = qd_letters(k)
    x, half = letters[0], letters[k]
    rules = [((x, x), ()),
             (tuple(x if i % 2 == 0 else half for i in range(m)), tuple(half if i % 2 == 0 else x for i in range(m)))]
    rules += [((letters[a], letters[2 * k - a]), ()) for a in range(1, 2 * k)]
    rules += [((letters[a], letters[b]), (letters[(a + b) % (2 * k)],))
              for a in range(1, 2 * k) for b in range(1, 2 * k) if (a + b) % (2 * k)]
    return RewritingSystem(letters, rules)


def qd_critical_pair_count(m: int, k: int) -> Dict[str, int]:
    """
    Number of overlaps of the QD_(m,k) system, family by family; the system has no inclusions.
    """
    y_letters = 2 * k - 1
    return {
        'x x x': 1,
        'x x then braid': 1,
        'braid then x x': 1,
        'braid with itself': (m - 1) // 2,
        'cancel then cancel': y_letters,
        'cancel then merge': y_letters * (y_letters - 1),
        'merge then cancel': y_letters * (y_letters - 1),
        'merge then merge': y_letters * (y_letters - 1) ** 2,
    }


def word_problem_qd(m: int, k: int, first: Iterable[Union[str, Syllable]],
                    second: Iterable[Union[str, Syllable]]) -> bool:
    """
    Decides equality of two words in QD_(m,k) by comparing their irreducible forms.
    """
    system = qd_system(m, k)
    return system.reduce_to_irreducible(first) == system.reduce_to_irreducible(second)


def parse_rules(text: str) -> RewritingSystem:
    """
    Parses one rule 'lhs -> rhs' per line; an optional line 'alphabet <letters>' lists the letters
    from the greatest to the least, otherwise letters rank by first appearance, the first greatest.
    """
    alphabet = None
    rules = []
    seen = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == 'alphabet':
            if alphabet is not None or rules:
                raise RewritingError(f"Line {number}: the alphabet must be given once, before the rules")
            alphabet = tokens[1:]
            continue
        if tokens.count(ARROW) != 1:
            raise RewritingError(f"Line {number}: expected 'lhs {ARROW} rhs'")
        split = tokens.index(ARROW)
        lhs, rhs = tuple(tokens[:split]), tuple(tokens[split + 1:])
        seen.extend(letter for letter in lhs + rhs if letter not in seen)
        rules.append((lhs, rhs))
    try:
        return RewritingSystem(alphabet if alphabet is not None else seen, rules)
    except RewritingError as e:
        raise RewritingError(f"Invalid rewriting system: {e.text}") from None


def serialize_rules(system: RewritingSystem) -> str:
    lines = ['alphabet ' + ' '.join(system.alphabet)] + [str(rule) for rule in system.rules]
    return ''.join(line + '\n' for line in lines)


class RewritingError(Exception):
    """
    The error will be raised when a rewriting system or a word over its alphabet is malformed
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text
