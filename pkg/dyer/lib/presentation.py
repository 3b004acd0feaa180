"""
This module describes the defining data of Dyer and quasi-Dyer groups: a simplicial graph with
edge labels m(e) and vertex orders f(v). It classifies presentations, builds induced
subpresentations and reads/writes the line-oriented presentation file format.
"""

import math
import re
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx

INFINITY = math.inf

Order = Union[int, float]

_NAME = re.compile(r'^[A-Za-z0-9]+$')


class PresentationClass(Enum):
    COXETER = 'Coxeter'
    GRAPH_PRODUCT_CYCLIC = 'GraphProductCyclic'
    DYER = 'Dyer'
    QUASI_DYER = 'QuasiDyer'
    INVALID = 'Invalid'


# Most specific class first; classify() returns the first one a presentation satisfies
_CLASS_ORDER = (PresentationClass.COXETER, PresentationClass.GRAPH_PRODUCT_CYCLIC,
                PresentationClass.DYER, PresentationClass.QUASI_DYER)


class Presentation:
    """
    An immutable triple (Γ, m, f). The graph Γ is kept as a networkx graph whose edges carry the
    label ``m``; the declaration order of the vertices is the total order used by every
    normal form downstream.
    """

    def __init__(self, orders: Union[Dict[str, Order], Iterable[Tuple[str, Order]]] = (),
                 edges: Iterable[Tuple[str, str, int]] = ()):
        items = list(orders.items()) if isinstance(orders, dict) else list(orders)

        graph = nx.Graph()
        for vertex, order in items:
            _check_vertex_name(vertex)
            if vertex in graph:
                raise PresentationError(f"Vertex '{vertex}' is declared twice")
            graph.add_node(vertex, order=_check_order(vertex, order))

        for u, v, m in edges:
            for vertex in (u, v):
                if vertex not in graph:
                    raise UnknownVertexError(f"Edge {u}-{v} uses undeclared vertex '{vertex}'")
            if u == v:
                raise PresentationError(f"Self-loop at vertex '{u}' is not allowed")
            if graph.has_edge(u, v):
                raise PresentationError(f"Edge {u}-{v} is declared twice")
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise PresentationError(f"Edge {u}-{v} must have an integer label m >= 2, got {m}")
            graph.add_edge(u, v, m=m)

        self._graph = nx.freeze(graph)
        self._vertices = tuple(vertex for vertex, _ in items)
        self._index = {vertex: i for i, vertex in enumerate(self._vertices)}

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    def __contains__(self, vertex) -> bool:
        return vertex in self._index

    def __len__(self) -> int:
        return len(self._vertices)

    def index(self, vertex: str) -> int:
        """
        Position of the vertex in declaration order.

        :param vertex: vertex identifier
        :return: zero-based index
        """
        try:
            return self._index[vertex]
        except KeyError:
            raise UnknownVertexError(f"Unknown vertex '{vertex}'") from None

    def order(self, vertex: str) -> Order:
        self.index(vertex)
        return self._graph.nodes[vertex]['order']

    def edge_label(self, u: str, v: str) -> Optional[int]:
        """
        :return: m({u, v}) if u and v are adjacent, None otherwise
        """
        self.index(u)
        self.index(v)
        data = self._graph.get_edge_data(u, v)
        return data['m'] if data else None

    def edges(self) -> List[Tuple[str, str, int]]:
        """
        Edges as (u, v, m) with u declared before v, sorted by the declaration order of the endpoints.
        """
        result = []
        for u, v, m in self._graph.edges(data='m'):
            if self._index[u] > self._index[v]:
                u, v = v, u
            result.append((u, v, m))
        return sorted(result, key=lambda edge: (self._index[edge[0]], self._index[edge[1]]))

    def violations(self) -> List[str]:
        """
        Lists the quasi-Dyer constraints this presentation breaks, one readable sentence per edge.

        :return: empty list for quasi-Dyer presentations
        """
        problems = []
        for u, v, m in self.edges():
            fu, fv = self.order(u), self.order(v)
            if m > 2 and m % 2 == 0 and not (fu == 2 and fv == 2):
                problems.append(f"edge {u}-{v}: even m={m} > 2 requires f({u}) = f({v}) = 2")
            elif m > 2 and m % 2 == 1:
                if not (_is_even(fu) and _is_even(fv)):
                    problems.append(f"edge {u}-{v}: odd m={m} requires finite even orders at both ends")
                elif 2 not in (fu, fv):
                    problems.append(f"edge {u}-{v}: odd m={m} requires f({u}) = 2 or f({v}) = 2")
        return problems

    def satisfies(self, presentation_class: PresentationClass) -> bool:
        """
        Checks the constraints of one class against this presentation. Several classes may hold at
        once (a presentation with all orders 2 and all labels 2 is both Coxeter and a graph product).
        """
        orders = [self.order(vertex) for vertex in self._vertices]
        labels = [m for _, _, m in self.edges()]
        if presentation_class is PresentationClass.INVALID:
            return bool(self.violations())
        if presentation_class is PresentationClass.COXETER:
            return all(order == 2 for order in orders)
        if presentation_class is PresentationClass.GRAPH_PRODUCT_CYCLIC:
            return all(m == 2 for m in labels)
        if presentation_class is PresentationClass.DYER:
            return all(m == 2 or (self.order(u) == 2 and self.order(v) == 2) for u, v, m in self.edges())
        return not self.violations()

    def classify(self) -> PresentationClass:
        """
        :return: the most specific class whose constraints hold, INVALID if the quasi-Dyer ones fail
        """
        for presentation_class in _CLASS_ORDER:
            if self.satisfies(presentation_class):
                return presentation_class
        return PresentationClass.INVALID

    def is_dyer(self) -> bool:
        return self.satisfies(PresentationClass.DYER)

    def qd_parameters(self) -> Optional[Tuple[int, int]]:
        """
        Recognizes the two-generator shape QD_{m,k}: one edge with odd m >= 3 joining a vertex of
        order 2 to a vertex of order 2k, k >= 2.

        :return: (m, k) or None
        """
        if len(self._vertices) != 2 or self._graph.number_of_edges() != 1:
            return None
        (u, v, m), = self.edges()
        orders = sorted((self.order(u), self.order(v)))
        if m < 3 or m % 2 == 0 or orders[0] != 2 or not _is_even(orders[1]) or orders[1] < 4:
            return None
        return m, int(orders[1]) // 2

    def property_d_known(self) -> bool:
        """
        True when the word problem engine is known to be complete: Dyer presentations and QD_{m,k}.
        """
        return self.is_dyer() or self.qd_parameters() is not None

    def induced(self, subset: Iterable[str]) -> 'Presentation':
        """
        Builds the full subpresentation on a vertex subset, keeping the declaration order.

        :param subset: vertices to keep
        :return: (Γ_U, m_U, f_U)
        """
        subset = set(subset)
        for vertex in subset:
            self.index(vertex)
        kept = [vertex for vertex in self._vertices if vertex in subset]
        subgraph = self._graph.subgraph(kept)
        return Presentation([(vertex, self.order(vertex)) for vertex in kept],
                            [(u, v, m) for u, v, m in subgraph.edges(data='m')])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self._vertices == other._vertices
                and all(self.order(v) == other.order(v) for v in self._vertices)
                and self.edges() == other.edges())

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Presentation({serialize(self)!r})"


def quasi_dyer_pair(m: int, k: int, x: str = 'x', y: str = 'y') -> Presentation:
    """
    The presentation of QD_{m,k}: x of order 2, y of order 2k, and [x, y^k]_m = [y^k, x]_m.
    """
    if m < 3 or m % 2 == 0 or k < 2:
        raise PresentationError(f"QD_(m,k) needs odd m >= 3 and k >= 2, got m={m}, k={k}")
    return Presentation([(x, 2), (y, 2 * k)], [(x, y, m)])


def parse(text: str) -> Presentation:
    """
    Parses the presentation file format.

    :param text: lines 'vertex <name> order <n|inf>' and 'edge <u> <v> m <n>', '#' starts a comment
    :return: the presentation
    """
    orders = []
    declared = set()
    edges = []
    joined = set()
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        try:
            if tokens[0] == 'vertex':
                if len(tokens) != 4 or tokens[2] != 'order':
                    raise PresentationError("expected 'vertex <name> order <n|inf>'")
                name = tokens[1]
                _check_vertex_name(name)
                if name in declared:
                    raise PresentationError(f"vertex '{name}' is declared twice")
                orders.append((name, _check_order(name, _parse_number(tokens[3], allow_inf=True))))
                declared.add(name)
            elif tokens[0] == 'edge':
                if len(tokens) != 5 or tokens[3] != 'm':
                    raise PresentationError("expected 'edge <name> <name> m <n>'")
                for name in tokens[1:3]:
                    if name not in declared:
                        raise UnknownVertexError(f"undeclared vertex '{name}'")
                if tokens[1] == tokens[2]:
                    raise PresentationError(f"self-loop at vertex '{tokens[1]}' is not allowed")
                if frozenset(tokens[1:3]) in joined:
                    raise PresentationError(f"edge {tokens[1]}-{tokens[2]} is declared twice")
                m = _parse_number(tokens[4])
                if m < 2:
                    raise PresentationError(f"edge {tokens[1]}-{tokens[2]} must have a label m >= 2, got {m}")
                joined.add(frozenset(tokens[1:3]))
                edges.append((tokens[1], tokens[2], m))
            else:
                raise PresentationError(f"unknown directive '{tokens[0]}'")
        except PresentationError as e:
            raise PresentationSyntaxError(f"Line {number}: {e.text}") from None

    try:
        return Presentation(orders, edges)
    except PresentationError as e:
        raise PresentationSyntaxError(e.text) from None


def serialize(presentation: Presentation) -> str:
    """
    Writes a presentation in the file format; vertices first in declaration order, then edges.
    """
    lines = []
    for vertex in presentation.vertices:
        order = presentation.order(vertex)
        lines.append(f"vertex {vertex} order {'inf' if order == INFINITY else order}")
    for u, v, m in presentation.edges():
        lines.append(f"edge {u} {v} m {m}")
    return ''.join(line + '\n' for line in lines)


def _parse_number(token: str, allow_inf: bool = False) -> Order:
    if allow_inf and token == 'inf':
        return INFINITY
    try:
        return int(token)
    except ValueError:
        raise PresentationError(f"'{token}' is not an integer") from None


def _check_vertex_name(name) -> None:
    if not isinstance(name, str) or not _NAME.match(name):
        raise PresentationError(f"Vertex name {name!r} must be a nonempty alphanumeric string")


def _check_order(vertex: str, order) -> Order:
    if order == INFINITY:
        return INFINITY
    if isinstance(order, bool) or not isinstance(order, int) or order < 2:
        raise PresentationError(f"Order of vertex '{vertex}' must be an integer >= 2 or inf, got {order}")
    return order


def _is_even(order: Order) -> bool:
    return order != INFINITY and order % 2 == 0


class PresentationError(Exception):
    """
    The error will be raised when the defining data of a group is malformed
    """
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class PresentationSyntaxError(PresentationError):
    """
    The error will be raised when the text of a presentation can't be parsed
    """


class UnknownVertexError(PresentationError):
    """
    The error will be raised when a vertex is referenced that the presentation doesn't declare
    """
