"""
This module implements loading presentations and rewriting systems from files
"""

import codecs
import os
from os import stat

from dyer.lib.presentation import Presentation, parse
from dyer.lib.rewriting import RewritingSystem, parse_rules


def load_text(filename: str, encoding: str = 'utf-8', allow_empty: bool = True) -> str:
    """
    :param filename: str - filename
    :param encoding: encoding of the file
    :param allow_empty: if it's false, an empty file raises EmptyFileError
    :return: str - content of the file
    """

    if not isinstance(filename, str):
        raise TypeError("That type isn't string!")

    if not os.path.isfile(filename):
        raise FileNotFoundError(f"this file: \"{filename}\" doesn't exist!")

    if not allow_empty and stat(filename).st_size == 0:
        raise EmptyFileError(f"The specified file: \"{filename}\" is empty!")

    with codecs.open(filename, 'r', encoding) as f:
        return f.read()


def load_presentation(filename: str, encoding: str = 'utf-8') -> Presentation:
    """
    An empty file is the presentation of the trivial group.
    """
    return parse(load_text(filename, encoding))


def load_rules(filename: str, encoding: str = 'utf-8') -> RewritingSystem:
    return parse_rules(load_text(filename, encoding, allow_empty=False))


class EmptyFileError(Exception):
    """
    The error will be raised when empty file is passed to input
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text
