"""
This module contains functions for reading command line values (vertex sets, parabolic subgroups)
and for printing the results of the commands as plain text or json-lines
"""

import io
import json
from typing import Iterable, List

from dyer.lib.configurator import FORMAT_JSON_LINES
from dyer.lib.parabolic import ParabolicCalculus, ParabolicError, ParabolicSubgroup
from dyer.lib.presentation import Presentation, UnknownVertexError
from dyer.lib.reducer import GroupElement, Reducer
from dyer.lib.rewriting import CriticalPair

PARABOLIC_SEPARATOR = ';'
VERTEX_SEPARATOR = ','


def parse_vertices(presentation: Presentation, text: str) -> frozenset:
    """
    :param presentation: the presentation declaring the vertices
    :param text: comma-separated vertex names, possibly empty
    :return: set of vertices
    """
    vertices = frozenset(name.strip() for name in text.split(VERTEX_SEPARATOR) if name.strip())
    for vertex in vertices:
        if vertex not in presentation:
            raise UnknownVertexError(f"Unknown vertex '{vertex}'")
    return vertices


def format_vertices(presentation: Presentation, vertices: Iterable[str]) -> str:
    return VERTEX_SEPARATOR.join(sorted(vertices, key=presentation.index))


def parse_parabolic(calculus: ParabolicCalculus, reducer: Reducer, text: str) -> ParabolicSubgroup:
    """
    Reads a parabolic subgroup written as '<conjugator word>;<comma-separated vertices>'.
    """
    if text.count(PARABOLIC_SEPARATOR) != 1:
        raise ParabolicError(f"A parabolic subgroup is written '<word>;<vertices>', got '{text}'")
    word, vertices = text.split(PARABOLIC_SEPARATOR)
    return calculus.parabolic(reducer.parse(word), parse_vertices(reducer.presentation, vertices))


def format_parabolic(subgroup: ParabolicSubgroup) -> str:
    return str(subgroup.conjugator) + PARABOLIC_SEPARATOR + format_vertices(subgroup.conjugator.presentation,
                                                                           subgroup.generators)


def format_element(element: GroupElement) -> str:
    return str(element)


def format_pair(pair: CriticalPair) -> str:
    words = (pair.u1, pair.u2, pair.u3, pair.v1, pair.v2)
    return pair.kind.value + ' (' + ', '.join('(' + ' '.join(word) + ')' for word in words) + ')'


def print_results(command: str, inputs: List[str], result, lines: List[str], file, output_format: str):
    """
    This function prints the result of a command into the passed file: the plain lines, or one JSON
    object with the fields command, inputs and result.

    :param command: name of the command
    :param inputs: the inputs as they were given
    :param result: JSON-serializable result
    :param lines: plain text rendering of the result
    :param file: an opened text file
    :param output_format: plain or json-lines
    """
    if not isinstance(file, io.TextIOBase):
        raise TypeError(f"Error: The file \"{file}\" is not a file")

    if output_format == FORMAT_JSON_LINES:
        file.write(json.dumps({'command': command, 'inputs': inputs, 'result': result}, ensure_ascii=False) + '\n')
    else:
        file.writelines(line + '\n' for line in lines)
    file.flush()
