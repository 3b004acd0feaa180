"""
This module provides GroupAnalyzer class that is a wrapper for a presentation and the engines working
with it, and runs the command requested on the command line.
"""

import sys

import dyer.lib.configurator as cfg
from dyer.lib.cocycle import CocycleError, DyerModule
from dyer.lib.load_data import EmptyFileError
from dyer.lib.methods import (format_element, format_pair, format_parabolic, format_vertices, parse_parabolic,
                              parse_vertices, print_results)
from dyer.lib.oracles import ModelError, NotFiniteError
from dyer.lib.parabolic import ClosureMode, ParabolicCalculus, ParabolicError, Side
from dyer.lib.presentation import PresentationError
from dyer.lib.reducer import (BudgetExceededError, PresentationMismatchError, Reducer,
                              UnsupportedPresentationError)
from dyer.lib.rewriting import RewritingError, qd_system
from dyer.lib.syllabic import SyllableError, format_word, parse_word

# Errors reported as 'Error: <text>' with exit code 1
DOMAIN_ERRORS = (PresentationError, SyllableError, PresentationMismatchError, UnsupportedPresentationError,
                 CocycleError, ParabolicError, RewritingError, ModelError, NotFiniteError, EmptyFileError)


class GroupAnalyzer:
    @staticmethod
    def build(configurator: cfg.Configurator):
        analyzer = GroupAnalyzer()
        analyzer.config = configurator.get_config()
        analyzer.verbose = configurator.get_verbose()
        analyzer.values = configurator.get_command_values()
        analyzer.presentation = configurator.get_presentation(verbose=analyzer.verbose)
        analyzer.rules = configurator.get_rules(verbose=analyzer.verbose)
        analyzer._reducer = None
        return analyzer

    @property
    def reducer(self) -> Reducer:
        """
        The reducer is built on first use, so that 'validate' works on presentations it refuses.
        """
        if self._reducer is None:
            self._reducer = Reducer(self.presentation, self.config.budget)
            if self._reducer.unverified_presentation_class:
                print(f"Warning: unverified presentation class {self._reducer.presentation_class.value}: the "
                      f"normal forms may not be canonical", file=sys.stderr)
        return self._reducer

    def analyze(self):
        """
        This method runs the method of the requested command and prints its result into the stdout
        or the file given by -o/--output. Domain errors are printed to the stderr and end the program
        with the exit code 1.
        """
        commands = {
            cfg.COMMAND_VALIDATE: self._validate,
            cfg.COMMAND_NF: self._normal_form,
            cfg.COMMAND_EQ: self._equal,
            cfg.COMMAND_LEN: self._length,
            cfg.COMMAND_SUPP: self._support,
            cfg.COMMAND_TRACE: self._reduce_trace,
            cfg.COMMAND_COSET_MIN: self._coset_min,
            cfg.COMMAND_INTERSECT: self._intersect,
            cfg.COMMAND_PC: self._closure,
            cfg.COMMAND_CONFLUENCE: self._confluence,
            cfg.COMMAND_COCYCLE: self._cocycle,
        }
        command = self.config.command

        try:
            inputs, result, lines = commands[command]()
        except BudgetExceededError as e:
            print('Budget exceeded: ' + e.text, file=sys.stderr)
            exit(1)
        except DOMAIN_ERRORS as e:
            print('Error: ' + e.text, file=sys.stderr)
            exit(1)

        file = sys.stdout if self.config.output == cfg.STDOUT else open(self.config.output, 'w',
                                                                         encoding=self.config.encoding)
        try:
            print_results(command, inputs, result, lines, file, self.config.output_format)
        finally:
            if file is not sys.stdout:
                file.close()

    def _word(self, text: str):
        return parse_word(self.presentation, text)

    def _validate(self):
        presentation_class = self.presentation.classify()
        violations = self.presentation.violations()
        return [], {'class': presentation_class.value, 'violations': violations}, \
            [presentation_class.value] + violations

    def _normal_form(self):
        word = self.values['word']
        element = self.reducer.normal_form(self._word(word))
        return [word], format_element(element), [format_element(element)]

    def _equal(self):
        first, second = self.values['first'], self.values['second']
        equal = self.reducer.equal(self._word(first), self._word(second))
        return [first, second], equal, ['true' if equal else 'false']

    def _length(self):
        word = self.values['word']
        length = self.reducer.length(self._word(word))
        return [word], length, [str(length)]

    def _support(self):
        word = self.values['word']
        support = format_vertices(self.presentation, self.reducer.normal_form(self._word(word)).support())
        return [word], support, [support]

    def _reduce_trace(self):
        word = self.values['word']
        trace = []
        reduced = self.reducer.m_reduce(self._word(word), trace=trace)
        steps = [{'operation': operation.kind.value, 'position': operation.position, 'length': operation.length,
                  'word': format_word(after)} for operation, after in trace]
        lines = [f"{step['operation']} @{step['position']} len {step['length']}: {step['word']}" for step in steps]
        lines.append('result: ' + format_word(reduced))
        return [word], {'steps': steps, 'word': format_word(reduced)}, lines

    def _coset_min(self):
        word, side, sub = self.values['word'], Side(self.values['side']), self.values['sub']
        calculus = ParabolicCalculus(self.reducer, self.config.max_enumeration)
        split = calculus.min_coset_rep(self.reducer.normal_form(self._word(word)),
                                       parse_vertices(self.presentation, sub), side)
        result = {'representative': format_element(split.representative),
                  'remainder': format_element(split.remainder),
                  'length': len(split.representative),
                  'non_unique_possible': split.non_unique_possible}
        lines = [f"g0: {result['representative']}", f"h: {result['remainder']}", f"length: {result['length']}",
                 f"non_unique_possible: {'true' if split.non_unique_possible else 'false'}"]
        return [word, side.value, sub], result, lines

    def _intersect(self):
        first, second = self.values['p1'], self.values['p2']
        calculus = ParabolicCalculus(self.reducer, self.config.max_enumeration)
        intersection = calculus.intersect(parse_parabolic(calculus, self.reducer, first),
                                          parse_parabolic(calculus, self.reducer, second))
        return [first, second], format_parabolic(intersection), [format_parabolic(intersection)]

    def _closure(self):
        words, mode, family = self.values['words'], ClosureMode(self.values['mode']), self.values['family']
        calculus = ParabolicCalculus(self.reducer, self.config.max_enumeration)
        elements = [self.reducer.normal_form(self._word(word)) for word in words]
        subgroups = [parse_parabolic(calculus, self.reducer, text) for text in family]
        closure = calculus.parabolic_closure(elements, mode, subgroups)
        return words, format_parabolic(closure), [format_parabolic(closure)]

    def _confluence(self):
        qd, system = self.values['qd'], self.rules
        if qd is not None:
            system = qd_system(*qd)
            inputs = [f"qd {qd[0]},{qd[1]}"]
        else:
            inputs = [self.values['rules']]
        pairs = system.critical_pairs()
        unresolved = [pair for pair in pairs if not system.is_resolved(pair)]
        result = {'confluent': not unresolved, 'critical_pairs': len(pairs),
                  'unresolved': [format_pair(pair) for pair in unresolved]}
        lines = ['confluent' if not unresolved else 'not confluent',
                 f"critical pairs: {len(pairs)}, unresolved: {len(unresolved)}"]
        lines += ['unresolved: ' + format_pair(pair) for pair in unresolved]
        return inputs, result, lines

    def _cocycle(self):
        word = self.values['word']
        vector = DyerModule(self.reducer).cocycle(self._word(word))
        entries = [{'reflection': format_element(reflection.element), 'base_vertex': reflection.base_vertex,
                    'coefficient': coefficient} for reflection, coefficient in vector]
        lines = [f"{entry['reflection']} : {entry['coefficient']}" for entry in entries]
        return [word], {'entries': entries, 'length': len(vector)}, lines
