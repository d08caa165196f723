"""
Constructors for the layered graph families used throughout the package,
random layered graphs for property tests, and the closed-form Hilbert series
known for some of the families.

Level sizes are always given top first: ``complete_layered(m_N, ..., m_0)``.
"""
from dataclasses import dataclass
from itertools import combinations
import logging
from math import comb, prod
import random

import networkx as nx

from .exceptions import FamilyError
from .graph import LayeredGraph, is_uniform

log = logging.getLogger('generators')

BOTTOM = '*'


def _vertex_id(level, k):
    return 'v{}_{}'.format(level, k)


def _level_ids(level_sizes):
    """
    ``{level: [ids]}`` for sizes given top first.
    """
    height = len(level_sizes) - 1
    return {height - pos: [_vertex_id(height - pos, k + 1) for k in range(m)]
            for pos, m in enumerate(level_sizes)}


def complete_layered(*sizes):
    """
    ``C[m_N, ..., m_0]``: every vertex has an edge to every vertex one level
    down.

    Raises:
        FamilyError: no sizes, or a size below 1
    """
    if not sizes or any(not isinstance(m, int) or m < 1 for m in sizes):
        raise FamilyError('Complete layered graph sizes must be positive '
                          'integers, got {}'.format(list(sizes)))
    ids = _level_ids(sizes)
    levels = {v: level for level, vs in ids.items() for v in vs}
    edges = [(v, w) for level in range(1, len(sizes))
             for v in ids[level] for w in ids[level - 1]]
    return LayeredGraph(levels, edges)


def subset_id(subset):
    return '{' + ','.join(str(x) for x in sorted(subset)) + '}'


def boolean_graph(n):
    """
    ``Θ_N``: subsets of ``{1..N}`` by cardinality, with an edge from ``Y`` to
    ``Z`` when ``Z`` is ``Y`` minus one element. Ids look like ``{1,3}``.
    """
    if not isinstance(n, int) or n < 1:
        raise FamilyError('Boolean graph needs N >= 1, got {}'.format(n))
    ground = range(1, n + 1)
    levels = {}
    edges = []
    for k in range(n + 1):
        for subset in combinations(ground, k):
            levels[subset_id(subset)] = k
            for x in subset:
                edges.append((subset_id(subset),
                              subset_id(set(subset) - {x})))
    return LayeredGraph(levels, edges)


def cassidy_shelton(delete_b3_c2=False):
    """
    Height 4 graph with one top ``a``, three vertices on each of levels 3, 2
    and 1, and a single bottom ``*``. Levels 3 -> 2 and 2 -> 1 connect
    ``x_i`` to ``y_j`` exactly when ``i != j``.

    Args:
        delete_b3_c2 (bool): drop the edge ``(b3, c2)``
    """
    levels = {'a': 4, BOTTOM: 0}
    for i in (1, 2, 3):
        levels['b{}'.format(i)] = 3
        levels['c{}'.format(i)] = 2
        levels['d{}'.format(i)] = 1

    edges = [('a', 'b{}'.format(i)) for i in (1, 2, 3)]
    for upper, lower in (('b', 'c'), ('c', 'd')):
        edges += [('{}{}'.format(upper, i), '{}{}'.format(lower, j))
                  for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    edges += [('d{}'.format(i), BOTTOM) for i in (1, 2, 3)]

    if delete_b3_c2:
        edges.remove(('b3', 'c2'))
    return LayeredGraph(levels, edges)


def _prescribed_split(r):
    upper = (r - 1) // 2
    return upper, r - 1 - upper


def prescribed_rs_bounds(r):
    """
    Returns:
        tuple: smallest and largest feasible ``s`` for ``r``
    """
    upper, lower = _prescribed_split(r)
    return r - 3, upper * lower - 1


def prescribed_rs_feasible(r, s):
    if r < 3:
        return False
    low, high = prescribed_rs_bounds(r)
    return low <= s <= high


def prescribed_rs(r, s):
    """
    Height 3 uniform graph with ``|V_+| = r`` and ``|E_2| = s + 1``.

    A single top ``a`` covers ``b1 .. b_m`` (``m = (r-1)//2``), ``b1`` covers
    every ``c_j``, every ``b_i`` covers ``c1`` and every ``c_j`` covers ``*``.
    Further ``(b_i, c_j)`` edges are added in lexicographic order until
    ``|E_2| = s + 1``.

    Raises:
        FamilyError: ``r < 3`` or ``s`` outside the feasible band
    """
    if r < 3:
        raise FamilyError('prescribed_rs needs r >= 3, got {}'.format(r))
    if not prescribed_rs_feasible(r, s):
        low, high = prescribed_rs_bounds(r)
        raise FamilyError(
            's = {} infeasible for r = {}; need {} <= s <= {}'.format(
                s, r, low, high))

    upper, lower = _prescribed_split(r)
    bs = ['b{}'.format(i) for i in range(1, upper + 1)]
    cs = ['c{}'.format(j) for j in range(1, lower + 1)]
    levels = {'a': 3, BOTTOM: 0}
    levels.update({b: 2 for b in bs})
    levels.update({c: 1 for c in cs})

    middle = [(bs[0], c) for c in cs] + [(b, cs[0]) for b in bs[1:]]
    for b in bs:
        for c in cs:
            if len(middle) >= s + 1:
                break
            if (b, c) not in middle:
                middle.append((b, c))

    edges = [('a', b) for b in bs] + middle + [(c, BOTTOM) for c in cs]
    return LayeredGraph(levels, edges)


def palindromic_graph(r):
    """
    Height 3 graph whose algebra has ``h(A)^{-1} = 1 - rτ + rτ² - τ³``.

    ``V_2 = {b1, b2, e1 .. e_{r-7}}``, ``V_1 = {c1, c2, d1, d2}``; ``a`` covers
    ``b1, b2``; ``b_i`` and ``e1, e2`` cover ``c1, c2``; every ``e_i`` covers
    ``d1, d2``; all of ``V_1`` covers ``*``.
    """
    if r < 9:
        raise FamilyError('palindromic_graph needs r >= 9, got {}'.format(r))
    es = ['e{}'.format(i) for i in range(1, r - 6)]
    levels = {'a': 3, 'b1': 2, 'b2': 2, 'c1': 1, 'c2': 1, 'd1': 1, 'd2': 1,
              BOTTOM: 0}
    levels.update({e: 2 for e in es})

    edges = [('a', 'b1'), ('a', 'b2')]
    edges += [(x, c) for x in ['b1', 'b2'] + es[:2] for c in ('c1', 'c2')]
    edges += [(e, d) for e in es for d in ('d1', 'd2')]
    edges += [(y, BOTTOM) for y in ('c1', 'c2', 'd1', 'd2')]
    return LayeredGraph(levels, edges)


def random_layered(seed, level_sizes, density=0.5):
    """
    Reproducible random layered graph: each pair of vertices on adjacent
    levels is joined with probability ``density``. Nothing else is enforced.
    """
    if not level_sizes or any(m < 1 for m in level_sizes):
        raise FamilyError('Level sizes must be positive, got {}'.format(
            list(level_sizes)))
    rng = random.Random(seed)
    ids = _level_ids(level_sizes)
    levels = {v: level for level, vs in ids.items() for v in vs}
    edges = [(v, w) for level in range(1, len(level_sizes))
             for v in ids[level] for w in ids[level - 1]
             if rng.random() < density]
    return LayeredGraph(levels, edges)


def _components(graph, t):
    linked = nx.Graph()
    heads = sorted(graph.successors(t), key=graph.sort_key)
    linked.add_nodes_from(heads)
    for i, v in enumerate(heads):
        for w in heads[i + 1:]:
            if graph.successors(v) & graph.successors(w):
                linked.add_edge(v, w)
    return sorted((sorted(c, key=graph.sort_key)
                   for c in nx.connected_components(linked)),
                  key=lambda c: graph.sort_key(c[0]))


def _repair_edge(graph, first, second, keep_lower_uniform):
    """
    First edge ``v -> w`` in lexicographic order with ``v`` in ``first`` and
    ``w`` below some vertex of ``second``.
    """
    for v in first:
        for u in second:
            for w in sorted(graph.successors(u), key=graph.sort_key):
                if not keep_lower_uniform:
                    return v, w
                trial = LayeredGraph(graph.levels,
                                     list(graph.edge_list) + [(v, w)])
                if v not in is_uniform(trial).failing_tails:
                    return v, w
    return None


def random_uniform(seed, level_sizes, density=0.5):
    """
    Random layered graph post-processed into a uniform one.

    Every non-bottom vertex gets at least one outgoing edge. While some tail
    fails uniformity, the highest failing tail has its first two head
    components joined by one lexicographically first common-cover edge. With
    several bottom vertices, level 1 vertices keep a single edge down and a
    tail whose components cannot be joined without breaking a lower tail
    keeps only its first component instead.

    Same seed and sizes always give the same graph.
    """
    raw = random_layered(seed, level_sizes, density)
    rng = random.Random(seed)
    several_bottoms = level_sizes[-1] > 1
    edges = list(raw.edge_list)

    for v in raw.vertices:
        level = raw.levels[v]
        if level == 0:
            continue
        out = [e for e in edges if e[0] == v]
        if not out:
            edges.append((v, rng.choice(raw.vertices_at(level - 1))))
        elif level == 1 and several_bottoms and len(out) > 1:
            for e in out[1:]:
                edges.remove(e)

    graph = LayeredGraph(raw.levels, edges)
    limit = 4 * len(graph.vertices) ** 2 + 10
    for _ in range(limit):
        failing = is_uniform(graph).failing_tails
        if not failing:
            return graph
        t = max(failing, key=graph.sort_key)
        components = _components(graph, t)
        edge = None
        if graph.levels[t] >= 3:
            edge = _repair_edge(graph, components[0], components[1],
                                several_bottoms)
        if edge is not None:
            log.debug('Repairing tail {} with edge {}'.format(t, edge))
            graph = LayeredGraph(graph.levels, list(graph.edge_list) + [edge])
        else:
            keep = set(components[0])
            drop = [(t, h) for h in graph.successors(t) if h not in keep]
            log.debug('Repairing tail {} by dropping {}'.format(t, drop))
            graph = graph.without_edges(drop)

    raise FamilyError('Could not make a uniform graph from seed {} sizes {}'
                      .format(seed, list(level_sizes)))


# ======================================================================
# Closed forms
# ======================================================================

def complete_layered_hilbert_B(sizes):
    """
    ``1 + Σ_k Σ_{l >= k} m_l (m_{l-1} - 1) ... (m_{l-k+1} - 1) τ^k`` for
    ``C[m_N, ..., m_1, 1]``.

    Args:
        sizes (sequence): ``m_N, ..., m_0`` top first
    """
    m = list(reversed(sizes))
    height = len(sizes) - 1
    coeffs = [1]
    for k in range(1, height + 1):
        coeffs.append(sum(
            m[l] * prod(m[j] - 1 for j in range(l - k + 1, l))
            for l in range(k, height + 1)))
    return coeffs


def complete_layered_top_cohomology(sizes):
    """
    ``dim H^N`` of the poset ``C[m_N, ..., m_0]``: ``Π (m_i - 1)``.
    """
    return prod(m - 1 for m in sizes)


def boolean_hilbert_B(n):
    """
    ``1 + Σ_i Σ_{k >= i} C(N, k) C(k-1, i-1) τ^i``; a level ``k`` vertex of
    ``Θ_N`` contributes the top cohomology ``C(k-1, i-1)`` of its window.
    """
    return [1] + [sum(comb(n, k) * comb(k - 1, i - 1)
                      for k in range(i, n + 1))
                  for i in range(1, n + 1)]


def boolean_window_top_cohomology(n, i):
    """
    ``dim H^{i-2}(Θ_{N,i}) = C(N-1, i-1)``.
    """
    return comb(n - 1, i - 1)


def prescribed_rs_hilbert_B(r, s):
    return [1, r, s, s - r + 3]


def palindromic_inv_hilbert_A(r):
    return [1, -r, r, -1]


# ======================================================================
# Family specifications
# ======================================================================

FAMILIES = ('complete', 'boolean', 'cassidy-shelton',
            'cassidy-shelton-deleted', 'prescribed-rs', 'palindromic',
            'random-uniform', 'random-layered')


@dataclass(frozen=True)
class FamilySpec(object):
    family: str
    params: tuple = ()

    def build(self):
        p = self.params
        if self.family == 'complete':
            return complete_layered(*p)
        if self.family == 'boolean':
            return boolean_graph(*p)
        if self.family == 'cassidy-shelton':
            return cassidy_shelton(False)
        if self.family == 'cassidy-shelton-deleted':
            return cassidy_shelton(True)
        if self.family == 'prescribed-rs':
            return prescribed_rs(*p)
        if self.family == 'palindromic':
            return palindromic_graph(*p)
        if self.family == 'random-uniform':
            return random_uniform(p[0], p[1:])
        if self.family == 'random-layered':
            return random_layered(p[0], p[1:])
        raise FamilyError('Unknown family {!r}; choose from {}'.format(
            self.family, ', '.join(FAMILIES)))


_ARITY = {
    'boolean': (1, 1),
    'cassidy-shelton': (0, 0),
    'cassidy-shelton-deleted': (0, 0),
    'prescribed-rs': (2, 2),
    'palindromic': (1, 1),
}


def parse_family(name, args):
    """
    Build a :class:`FamilySpec` from command-line words, e.g.
    ``parse_family('complete', ['2', '3', '1'])``. Random families take the
    seed first, then the level sizes.

    Raises:
        FamilyError: unknown family, non-integer or wrong number of arguments
    """
    if name not in FAMILIES:
        raise FamilyError('Unknown family {!r}; choose from {}'.format(
            name, ', '.join(FAMILIES)))
    try:
        params = tuple(int(a) for a in args)
    except ValueError:
        raise FamilyError('Family parameters must be integers, got {}'.format(
            list(args)))

    low, high = _ARITY.get(name, (1, None))
    if name.startswith('random'):
        low = 2
    if len(params) < low or (high is not None and len(params) > high):
        raise FamilyError('{} takes {} parameter(s), got {}'.format(
            name, low if low == high else '{}+'.format(low), len(params)))
    return FamilySpec(name, params)
