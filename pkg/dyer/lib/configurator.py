"""
This module represents a configurator which will set any configurations,
get and process the parameters received from the command line
"""

import sys
from argparse import ArgumentParser, ArgumentTypeError
from dataclasses import dataclass
from typing import Optional, Tuple

from dyer.lib.load_data import EmptyFileError, load_presentation, load_rules
from dyer.lib.presentation import Presentation, PresentationError
from dyer.lib.reducer import OrbitBudget
from dyer.lib.oracles import DEFAULT_MAX_ENUMERATION
from dyer.lib.rewriting import RewritingError, RewritingSystem

STDOUT = 'STDOUT'
FORMAT_PLAIN = 'plain'
FORMAT_JSON_LINES = 'json-lines'

COMMAND_VALIDATE = 'validate'
COMMAND_NF = 'nf'
COMMAND_EQ = 'eq'
COMMAND_LEN = 'len'
COMMAND_SUPP = 'supp'
COMMAND_TRACE = 'reduce-trace'
COMMAND_COSET_MIN = 'coset-min'
COMMAND_INTERSECT = 'intersect'
COMMAND_PC = 'pc'
COMMAND_CONFLUENCE = 'confluence'
COMMAND_COCYCLE = 'cocycle'


@dataclass(frozen=True)
class CliConfig:
    command: str
    presentation_path: Optional[str]
    max_orbit_size: int
    max_word_length: int
    max_enumeration: int
    output_format: str = FORMAT_PLAIN
    output: str = STDOUT
    encoding: str = 'utf-8'
    verbose: bool = False

    def __post_init__(self):
        for name in ('max_orbit_size', 'max_word_length', 'max_enumeration'):
            if getattr(self, name) <= 0:
                raise ValueError(f"Error: {name} must be positive")

    @property
    def budget(self) -> OrbitBudget:
        return OrbitBudget(self.max_orbit_size, self.max_word_length)


class Configurator:
    def __init__(self, args):
        # Set descriptions of the program
        description = "This program solves the word problem in Dyer and quasi-Dyer groups given by a presentation " \
                      "file (-p parameter): it computes normal forms, lengths and supports of words, traces the " \
                      "M-operations of a reduction, works with parabolic subgroups, lists the reflection cocycle " \
                      "and checks confluence of string rewriting systems."
        program_name = "dyerwords"
        epilog = "Words are written as whitespace-separated tokens 'name' or 'name^k', e.g. \"y x^-2 y^3\"."
        self._parser = self._get_parser(program_name, description, epilog)

        # Get parameters from the arguments received from the command line
        self._parameters = self._get_parameters(args)

    @staticmethod
    def _get_parser(program_name: str = None, description: str = None, epilog: str = None) -> ArgumentParser:
        """
        Method creates the instance of the ArgumentParser class, adds the commands and their arguments
        in here and returns that instance.

        :param program_name: name of the program
        :param description: description of the program
        :param epilog: epilog of the program
        :return: an instance of the ArgumentParser class
        """

        parser = ArgumentParser(prog=program_name, description=description, epilog=epilog)

        # Options shared by every command
        common = ArgumentParser(add_help=False)
        common.add_argument('-p', '--presentation',
                            help="The presentation file: lines 'vertex <name> order <n|inf>' and "
                                 "'edge <name> <name> m <n>', '#' starts a comment.",
                            type=str)

        common.add_argument('--max-orbit-size',
                            help="How many words a type II orbit may contain before the computation is stopped.",
                            default=OrbitBudget.max_orbit_size,
                            type=int)

        common.add_argument('--max-word-length',
                            help="The longest syllabic word that will be processed.",
                            default=OrbitBudget.max_word_length,
                            type=int)

        common.add_argument('--max-enumeration',
                            help="How many elements a finite group may have when it is enumerated "
                                 "(pc --mode enumerate).",
                            default=DEFAULT_MAX_ENUMERATION,
                            type=int)

        common.add_argument('-f', '--format',
                            help="Output format: plain text or one JSON object per line with the fields "
                                 "command, inputs and result.",
                            choices=[FORMAT_PLAIN, FORMAT_JSON_LINES],
                            default=FORMAT_PLAIN)

        common.add_argument('-o', '--output',
                            help="The file where the results will be saved. By default they are printed.",
                            default=STDOUT,
                            type=str)

        common.add_argument('-e', '--encoding',
                            help="Encoding of the presentation and rules files.",
                            default='utf-8',
                            type=str)

        common.add_argument('-v', '--verbose',
                            help="If it specified, then the progress of loading will be printed to stderr",
                            action='store_true')

        commands = parser.add_subparsers(dest='command', metavar='command')

        commands.add_parser(COMMAND_VALIDATE, parents=[common],
                            help="Print the class of the presentation (Coxeter, GraphProductCyclic, Dyer, "
                                 "QuasiDyer or Invalid) and the violated constraints if any.")

        for name, help_text in ((COMMAND_NF, "Print the normal form of a word."),
                                (COMMAND_LEN, "Print the syllabic length of a word."),
                                (COMMAND_SUPP, "Print the support of a word: the vertices of its normal form."),
                                (COMMAND_TRACE, "Print the M-operations that reduce a word, one per line, "
                                                "with the word obtained after each of them."),
                                (COMMAND_COCYCLE, "Print the reflections and coefficients of the cocycle of a "
                                                  "word (Dyer presentations only).")):
            command = commands.add_parser(name, parents=[common], help=help_text)
            command.add_argument('word', help="The word, e.g. \"x y^2 x\"; an empty string is the identity.")

        command = commands.add_parser(COMMAND_EQ, parents=[common], help="Print true if two words are equal.")
        command.add_argument('first', help="The first word.")
        command.add_argument('second', help="The second word.")

        command = commands.add_parser(COMMAND_COSET_MIN, parents=[common],
                                      help="Print the minimal representative g0 of the coset gD_Y (left) or "
                                           "D_Yg (right) and the element h of D_Y with g = g0·h or g = h·g0.")
        command.add_argument('--side', choices=['left', 'right'], default='left',
                             help="Which coset of the standard parabolic subgroup is used.")
        command.add_argument('--sub', required=True,
                             help="The vertices of Y, comma-separated.")
        command.add_argument('word', help="The word g.")

        command = commands.add_parser(COMMAND_INTERSECT, parents=[common],
                                      help="Print the intersection of two parabolic subgroups.")
        command.add_argument('--p1', required=True,
                             help="The first parabolic subgroup as '<conjugator word>;<comma-separated vertices>'.")
        command.add_argument('--p2', required=True,
                             help="The second parabolic subgroup, same syntax as --p1.")

        command = commands.add_parser(COMMAND_PC, parents=[common],
                                      help="Print the smallest parabolic subgroup containing the given words.")
        command.add_argument('--mode', choices=['fold', 'enumerate'], default='enumerate',
                             help="fold intersects the subgroups given by --family, enumerate searches all "
                                  "parabolic subgroups of a finite group.")
        command.add_argument('--family', action='append', default=[],
                             help="A parabolic subgroup containing all words (fold mode), may be repeated.")
        command.add_argument('words', nargs='+', help="The words of the set A.")

        command = commands.add_parser(COMMAND_CONFLUENCE, parents=[common],
                                      help="Check that all critical pairs of a rewriting system are resolved.")
        source = command.add_mutually_exclusive_group(required=True)
        source.add_argument('--qd', type=_qd_parameters,
                            help="Use the rewriting system of QD_(m,k), given as 'm,k'.")
        source.add_argument('--rules',
                            help="A file with one rule 'lhs -> rhs' per line and an optional first line "
                                 "'alphabet <letters from the greatest to the least>'.")

        return parser

    def _get_parameters(self, args):
        """
        This method gets all parameters from the args of the command line.

        :param args: list of the arguments of the command line
        :return: parsed arguments
        """
        parameters = self._parser.parse_args(args)

        if not parameters.command:
            self._parser.error('No command requested, add one of: validate, nf, eq, len, supp, reduce-trace, '
                               'coset-min, intersect, pc, confluence, cocycle')
        if parameters.command != COMMAND_CONFLUENCE and not parameters.presentation:
            self._parser.error(f'The command {parameters.command} needs a presentation, add -p/--presentation')
        for name in ('max_orbit_size', 'max_word_length', 'max_enumeration'):
            if getattr(parameters, name) <= 0:
                self._parser.error(f"--{name.replace('_', '-')} must be positive")

        return parameters

    def get_config(self) -> CliConfig:
        parameters = self._parameters
        return CliConfig(command=parameters.command,
                         presentation_path=parameters.presentation,
                         max_orbit_size=parameters.max_orbit_size,
                         max_word_length=parameters.max_word_length,
                         max_enumeration=parameters.max_enumeration,
                         output_format=parameters.format,
                         output=parameters.output,
                         encoding=parameters.encoding,
                         verbose=parameters.verbose)

    def get_command(self) -> str:
        return self._parameters.command

    def get_command_values(self) -> dict:
        """
        Method returns a dictionary containing the arguments of the requested command

        :return: dict of the values
        """
        names = ('word', 'first', 'second', 'side', 'sub', 'p1', 'p2', 'mode', 'family', 'words', 'qd', 'rules')
        return {name: getattr(self._parameters, name) for name in names if hasattr(self._parameters, name)}

    def get_presentation(self, verbose: bool = False) -> Optional[Presentation]:
        """
        Method loads the presentation specified by -p/--presentation

        :return: the presentation, or None when the command doesn't need one
        """
        filename = self._parameters.presentation
        if not filename:
            return None
        if verbose:
            print(f"Loading the presentation from {filename}...", file=sys.stderr)

        try:
            return load_presentation(filename, self._parameters.encoding)
        except (TypeError, FileNotFoundError, UnicodeDecodeError) as e:
            print('Error: ' + str(e), file=sys.stderr)
            exit(1)
        except PresentationError as e:
            print('Error: ' + e.text, file=sys.stderr)
            exit(1)

    def get_rules(self, verbose: bool = False) -> Optional[RewritingSystem]:
        """
        Method loads the rewriting system specified by --rules
        """
        filename = getattr(self._parameters, 'rules', None)
        if not filename:
            return None
        if verbose:
            print(f"Loading the rewriting system from {filename}...", file=sys.stderr)

        try:
            return load_rules(filename, self._parameters.encoding)
        except (TypeError, FileNotFoundError, UnicodeDecodeError) as e:
            print('Error: ' + str(e), file=sys.stderr)
            exit(1)
        except (EmptyFileError, RewritingError) as e:
            print('Error: ' + e.text, file=sys.stderr)
            exit(1)

    def get_verbose(self) -> bool:
        return self._parameters.verbose


def _qd_parameters(text: str) -> Tuple[int, int]:
    try:
        m, k = (int(part) for part in text.split(','))
    except ValueError:
        raise ArgumentTypeError(f"expected 'm,k', got '{text}'") from None
    return m, k
