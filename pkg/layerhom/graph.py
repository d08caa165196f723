"""
Layered directed graphs and the partial order they induce.

A layered graph assigns every vertex a non-negative level and only has edges
that drop exactly one level. The poset of the graph says ``u > v`` when a
directed path runs from ``u`` down to ``v``; for a layered graph ``u`` covers
``v`` exactly when ``(u, v)`` is an edge.

Graphs are immutable. The strict order is answered from a transitive closure
computed once at construction and stored as one integer bitmask per vertex.
Vertices are always iterated in ascending ``(level, id)`` order.
"""
from collections import namedtuple
from hashlib import sha1
import json
import logging
from types import MappingProxyType

import networkx as nx

from .exceptions import GraphFormatError, UnknownVertexError


class UniformityReport(
        namedtuple('UniformityReport', ['uniform', 'failing_tails'])):
    __slots__ = ()

    def __bool__(self):
        return self.uniform


MinimalReport = namedtuple(
    'MinimalReport', ['vertices', 'all_level_zero', 'unique'])


class _PosetMixin(object):
    """
    Order queries shared by whole graphs and induced subgraphs. Subclasses
    provide ``vertices`` (ordered tuple), ``_owner`` (the graph holding the
    closure) and membership via ``__contains__``.
    """
    def _check(self, *vertices):
        for v in vertices:
            if v not in self:
                raise UnknownVertexError(v)

    def level(self, v):
        self._check(v)
        return self._owner._levels[v]

    def less(self, x, y):
        """
        ``x < y`` in the poset: a directed path runs from ``y`` down to ``x``.
        """
        self._check(x, y)
        owner = self._owner
        return bool(owner._down[owner._index[y]] >> owner._index[x] & 1)

    def reaches(self, u, v):
        """
        True when a directed path runs from ``u`` to ``v`` (``u > v``).
        """
        return self.less(v, u)

    def sort_key(self, v):
        return (self._owner._levels[v], v)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


class LayeredGraph(_PosetMixin):
    """
    Immutable layered graph.

    Args:
        levels (dict): vertex id -> level
        edges (iterable): ``(tail, head)`` pairs

    Raises:
        GraphFormatError: empty or non-string ids, negative levels, duplicate
            edges or edges naming unknown vertices. The layered condition
            itself is *not* enforced here; see :func:`validate`.
    """
    def __init__(self, levels, edges):
        self.log = logging.getLogger(self.__class__.__name__)

        checked = {}
        for v, level in dict(levels).items():
            if not isinstance(v, str) or not v:
                raise GraphFormatError('Vertex ids must be non-empty strings, '
                                       'got {!r}'.format(v))
            if isinstance(level, bool) or not isinstance(level, int) \
               or level < 0:
                raise GraphFormatError(
                    'Vertex {} has invalid level {!r}'.format(v, level))
            checked[v] = level
        self._levels = MappingProxyType(checked)

        edge_list = []
        seen = set()
        for edge in edges:
            try:
                tail, head = edge
            except (TypeError, ValueError):
                raise GraphFormatError('Malformed edge {!r}'.format(edge))
            for v in (tail, head):
                if v not in checked:
                    raise GraphFormatError(
                        'Edge ({}, {}) names unknown vertex {}'.format(
                            tail, head, v))
            if (tail, head) in seen:
                raise GraphFormatError('Duplicate edge ({}, {})'.format(
                    tail, head))
            seen.add((tail, head))
            edge_list.append((tail, head))

        self.vertices = tuple(sorted(checked, key=lambda v: (checked[v], v)))
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self.edges = frozenset(seen)
        self.edge_list = tuple(sorted(
            edge_list, key=lambda e: (self._index[e[0]], self._index[e[1]])))
        self.height = max(checked.values()) if checked else 0

        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.vertices)
        digraph.add_edges_from(self.edge_list)
        self.digraph = nx.freeze(digraph)

        self._successors = {
            v: frozenset(digraph.successors(v)) for v in self.vertices}

        # bit j of _down[i] is set when vertices[j] < vertices[i]
        self._down = []
        for v in self.vertices:
            mask = 0
            for w in nx.descendants(digraph, v):
                if w != v:
                    mask |= 1 << self._index[w]
            self._down.append(mask)

        self._owner = self
        self._fingerprint = None
        self.log.debug('Built graph: {} vertices, {} edges, height {}'.format(
            len(self.vertices), len(self.edges), self.height))

    def __contains__(self, v):
        return v in self._levels

    @property
    def levels(self):
        return self._levels

    def successors(self, v):
        self._check(v)
        return self._successors[v]

    def covers(self, u, v):
        self._check(u, v)
        return (u, v) in self.edges

    def vertices_at(self, level):
        return tuple(v for v in self.vertices if self._levels[v] == level)

    @property
    def positive_vertices(self):
        """
        ``V_+``: every vertex above level 0.
        """
        return tuple(v for v in self.vertices if self._levels[v] > 0)

    def edges_from_level(self, level):
        """
        ``E_i``: the edges whose tail has the given level.
        """
        return tuple(e for e in self.edge_list if self._levels[e[0]] == level)

    def below(self, a):
        """
        Returns:
            tuple: vertices ``w`` with ``w < a`` in (level, id) order
        """
        self._check(a)
        mask = self._down[self._index[a]]
        return tuple(w for i, w in enumerate(self.vertices) if mask >> i & 1)

    def above(self, x):
        self._check(x)
        bit = 1 << self._index[x]
        return tuple(v for i, v in enumerate(self.vertices)
                     if self._down[i] & bit)

    def subgraph(self, vertices):
        return InducedSubgraph(self, vertices)

    def relabel(self, mapping):
        """
        Copy of the graph with every id replaced by ``mapping[id]``.
        """
        return LayeredGraph(
            {mapping[v]: level for v, level in self._levels.items()},
            [(mapping[t], mapping[h]) for t, h in self.edge_list])

    def without_edges(self, edges):
        removed = set(edges)
        return LayeredGraph(
            self._levels, [e for e in self.edge_list if e not in removed])

    # ---------------------------------------------------------------- JSON

    def to_dict(self):
        return {
            'vertices': [{'id': v, 'level': self._levels[v]}
                         for v in self.vertices],
            'edges': [[t, h] for t, h in self.edge_list],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data):
        """
        Build a graph from the shared JSON document::

            {"vertices": [{"id": "a", "level": 3}, ...],
             "edges": [["a", "b"], ...]}

        Raises:
            GraphFormatError: missing keys, duplicate vertices or edges
        """
        if not isinstance(data, dict) or 'vertices' not in data:
            raise GraphFormatError('Graph document needs a "vertices" list')

        levels = {}
        for entry in data['vertices']:
            try:
                v, level = entry['id'], entry['level']
            except (TypeError, KeyError):
                raise GraphFormatError('Malformed vertex entry {!r}'.format(
                    entry))
            if v in levels:
                raise GraphFormatError('Duplicate vertex {}'.format(v))
            levels[v] = level

        edges = data.get('edges', [])
        if not isinstance(edges, list):
            raise GraphFormatError('"edges" must be a list of [tail, head]')

        return cls(levels, [tuple(e) if isinstance(e, list) else e
                            for e in edges])

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except ValueError as e:
            raise GraphFormatError('Graph JSON does not parse: {}'.format(e))
        return cls.from_dict(data)

    # ------------------------------------------------------------ identity

    @property
    def fingerprint(self):
        if self._fingerprint is None:
            self._fingerprint = sha1(
                self.to_json(sort_keys=True).encode()).hexdigest()
        return self._fingerprint

    def __eq__(self, other):
        if not isinstance(other, LayeredGraph):
            return NotImplemented
        return self._levels == other._levels and self.edges == other.edges

    def __hash__(self):
        return hash(self.fingerprint)

    def __repr__(self):
        return '<LayeredGraph |V|={} |E|={} N={} {}>'.format(
            len(self.vertices), len(self.edges), self.height,
            self.fingerprint[:10])


class InducedSubgraph(_PosetMixin):
    """
    Subgraph of ``parent`` on a vertex subset, keeping every parent edge whose
    endpoints both survive. Its order is the parent's order restricted to the
    subset; for the convex subsets used here (level windows, intervals and
    principal up/down sets) that is the same as the path order inside the
    subgraph.
    """
    def __init__(self, parent, vertices):
        self.parent = parent
        self._owner = parent
        members = frozenset(vertices)
        for v in members:
            if v not in parent:
                raise UnknownVertexError(v)
        self.vertex_set = members
        self.vertices = tuple(v for v in parent.vertices if v in members)
        self.edges = frozenset(
            e for e in parent.edges if e[0] in members and e[1] in members)
        self.edge_list = tuple(e for e in parent.edge_list if e in self.edges)

    def __contains__(self, v):
        return v in self.vertex_set

    def successors(self, v):
        self._check(v)
        return frozenset(w for w in self.parent.successors(v)
                         if w in self.vertex_set)

    def covers(self, u, v):
        self._check(u, v)
        return (u, v) in self.edges

    def to_graph(self):
        """
        Standalone :class:`LayeredGraph` with the same vertices and edges.
        """
        return LayeredGraph({v: self.parent.levels[v] for v in self.vertices},
                            self.edge_list)

    def __repr__(self):
        return '<InducedSubgraph |V|={} |E|={} of {!r}>'.format(
            len(self.vertices), len(self.edges), self.parent)


# ======================================================================
# Operations
# ======================================================================

def validate(graph):
    """
    Check the layered condition on every edge.

    Returns:
        list: one human-readable violation per offending edge; empty when
            every edge drops exactly one level
    """
    violations = []
    for tail, head in graph.edge_list:
        drop = graph.levels[tail] - graph.levels[head]
        if tail == head:
            violations.append('edge ({0}, {0}) is a loop'.format(tail))
        elif drop != 1:
            violations.append(
                'edge ({}, {}) drops level {} -> {} ({} != 1)'.format(
                    tail, head, graph.levels[tail], graph.levels[head], drop))
    return violations


def less_than(graph, u, v):
    """
    True iff a directed path runs from ``u`` to ``v``, that is ``v < u`` in the
    poset. Arguments follow edge direction.
    """
    return graph.reaches(u, v)


def covers(graph, u, v):
    return graph.covers(u, v)


def successor_set(graph, v):
    """
    ``S(v)``: heads of the edges leaving ``v``.
    """
    return graph.successors(v)


def level_window_subgraph(graph, a, i):
    """
    ``Γ_{a,i}``: subgraph induced by ``{w : a > w, |a| - |w| <= i - 1}``.
    Empty whenever ``i <= 1``.
    """
    top = graph.level(a)
    return graph.subgraph(
        w for w in graph.below(a) if top - graph.levels[w] <= i - 1)


def unique_top(graph):
    """
    The single maximal vertex of ``graph``.

    Raises:
        GraphFormatError: zero or several maximal vertices
    """
    tops = [v for v in graph.vertices if not graph.above(v)]
    if len(tops) != 1:
        raise GraphFormatError(
            'Graph has {} maximal vertices; expected exactly one'.format(
                len(tops)))
    return tops[0]


def window(graph, i):
    """
    ``Γ_i``: the level window below the unique maximal vertex.
    """
    return level_window_subgraph(graph, unique_top(graph), i)


def interval(graph, x, y):
    """
    Open interval ``(x, y) = {z : x < z < y}`` as an induced subgraph.
    """
    return graph.subgraph(z for z in graph.below(y) if graph.less(x, z))


def _heads_connected(graph, heads):
    linked = nx.Graph()
    linked.add_nodes_from(heads)
    ordered = sorted(heads, key=graph.sort_key)
    for i, v in enumerate(ordered):
        for w in ordered[i + 1:]:
            if graph.successors(v) & graph.successors(w):
                linked.add_edge(v, w)
    return nx.is_connected(linked)


def is_uniform(graph):
    """
    A tail ``t`` passes when ``S(t)`` is connected under "share a lower
    cover". Tails with fewer than two heads pass trivially.

    Returns:
        UniformityReport: truthy iff every tail passes; ``failing_tails``
            lists the others in vertex order
    """
    failing = []
    for t in graph.vertices:
        heads = graph.successors(t)
        if len(heads) >= 2 and not _heads_connected(graph, heads):
            failing.append(t)
    return UniformityReport(not failing, tuple(failing))


def down_up_connected(graph, t, v, w):
    """
    Literal down-up search: can ``v`` reach ``w`` through vertices
    ``v = v_0, ..., v_k = w`` of level ``|v|``, all below ``t``, where each
    consecutive pair lies above a common vertex one level down?
    """
    level = graph.level(v)
    if graph.level(w) != level:
        return False
    allowed = [u for u in graph.vertices_at(level) if graph.less(u, t)]
    if v not in allowed or w not in allowed:
        return False
    lower = graph.vertices_at(level - 1)

    reached = {v}
    frontier = [v]
    while frontier:
        current = frontier.pop()
        for z in lower:
            if not graph.less(z, current):
                continue
            for u in allowed:
                if u not in reached and graph.less(z, u):
                    reached.add(u)
                    frontier.append(u)
    return w in reached


def is_uniform_literal(graph):
    """
    Uniformity checked pair by pair with :func:`down_up_connected`.
    """
    failing = []
    for t in graph.vertices:
        heads = sorted(graph.successors(t), key=graph.sort_key)
        if any(not down_up_connected(graph, t, heads[0], h)
               for h in heads[1:]):
            failing.append(t)
    return UniformityReport(not failing, tuple(failing))


def minimal_vertices(graph):
    """
    Vertices with empty successor set, plus whether they all lie in ``V_0``
    and whether there is exactly one.
    """
    found = tuple(v for v in graph.vertices if not graph.successors(v))
    return MinimalReport(
        found,
        all(graph.levels[v] == 0 for v in found),
        len(found) == 1)
