"""
Brute-force graded dimensions of ``B(Γ)`` straight from its presentation.

``B(Γ)`` is generated by ``V_+`` subject to ``u·w = 0`` when ``(u, w)`` is not
an edge and ``v·Σ_{w ∈ S(v)} w = 0`` for ``|v| > 1``. Modulo the first family
the surviving monomials are path words, so everything here works on path
words only: degree ``n`` of ``B(Γ)`` is the span of the length ``n`` path
words modulo the span of the relation vectors.

Nothing in this module touches order homology; it exists to check the
homological formulas independently.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
import logging

from .config import get_config
from .exceptions import InvalidGraphError
from .graph import validate
from .series import hilbert_B

log = logging.getLogger('oracle')

#: A path word is a tuple of ``V_+`` ids, each letter covering the next.
PathWord = tuple


def is_path_word(graph, word):
    if not word:
        return False
    if any(v not in graph or graph.levels[v] == 0 for v in word):
        return False
    return all(graph.covers(u, w) for u, w in zip(word, word[1:]))


def enumerate_path_words(graph, n):
    """
    Every length ``n`` sequence of ``V_+`` vertices joined by edges, in
    lexicographic order of the id tuples.
    """
    if n < 1:
        return []
    positive = set(graph.positive_vertices)
    words = []

    def extend(word):
        if len(word) == n:
            words.append(word)
            return
        for w in graph.successors(word[-1]):
            if w in positive:
                extend(word + (w,))

    for v in graph.positive_vertices:
        extend((v,))
    return sorted(words)


@dataclass
class PathWordSystem(object):
    """
    Basis of degree ``n`` path words plus the relation vectors among them.

    Relations are stored sparsely as ``{basis index: coefficient}``.
    """
    degree: int
    basis: list
    relations: list = dc_field(default_factory=list)

    def __post_init__(self):
        self.index = {word: i for i, word in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise ValueError('Path word basis has duplicates')

    def entries(self):
        return {row: dict(vector) for row, vector in enumerate(self.relations)}

    @property
    def shape(self):
        return len(self.relations), len(self.basis)

    def rank(self, field, sparse_threshold=None):
        if sparse_threshold is None:
            sparse_threshold = get_config().sparse_threshold
        return field.rank(self.entries(), self.shape, sparse_threshold)


def relation_vectors(graph, n, field=None):
    """
    Relation vectors in degree ``n``.

    For each path word ``x·v`` of length ``k <= n-1`` ending in a vertex with
    ``|v| >= 2``, and each continuation ``q`` of length ``n-k-1``, the vector
    sums ``e_(x,v,w,q)`` over the ``w ∈ S(v)`` for which ``(x,v,w,q)`` is a
    path word. Terms that are not path words vanish already.

    ``field`` is accepted for symmetry with the rank step; coefficients are
    all 1 and need no conversion.
    """
    basis = enumerate_path_words(graph, n)
    system = PathWordSystem(n, basis)
    if n < 2:
        return system

    by_first = {}
    for m in range(1, n - 1):
        for q in enumerate_path_words(graph, m):
            by_first.setdefault((m, q[0]), []).append(q)

    for k in range(1, n):
        m = n - k - 1
        for prefix in enumerate_path_words(graph, k):
            v = prefix[-1]
            if graph.levels[v] < 2:
                continue
            heads = sorted(graph.successors(v))
            if not heads:
                continue
            if m == 0:
                vector = {system.index[prefix + (w,)]: 1 for w in heads}
                system.relations.append(vector)
                continue

            # continuations grouped by the q they share
            tails = {}
            for w in heads:
                for u in graph.successors(w):
                    for q in by_first.get((m, u), ()):
                        tails.setdefault(q, []).append(w)
            for q in sorted(tails):
                vector = {system.index[prefix + (w,) + q]: 1
                          for w in tails[q]}
                system.relations.append(vector)

    log.debug('Degree {}: {} path words, {} relations'.format(
        n, len(basis), len(system.relations)))
    return system


def _degree_stats(graph, n, field, config):
    system = relation_vectors(graph, n, field)
    rank = system.rank(field, config.sparse_threshold)
    return {
        'degree': n,
        'words': len(system.basis),
        'relations': len(system.relations),
        'rank': rank,
        'dim': len(system.basis) - rank,
    }


def _require_valid(graph):
    violations = validate(graph)
    if violations:
        raise InvalidGraphError(violations)


def _graded(graph, max_degree, breakdown):
    dims = [1, len(graph.positive_vertices)][:max_degree + 1]
    return dims + [row['dim'] for row in breakdown]


def _breakdown(graph, max_degree, field, config):
    degrees = list(range(2, max_degree + 1))
    if config.workers > 1 and len(degrees) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(
                lambda n: _degree_stats(graph, n, field, config), degrees))
    return [_degree_stats(graph, n, field, config) for n in degrees]


def b_graded_dims(graph, max_degree=None, field=None, config=None):
    """
    ``dim B_0 .. dim B_max_degree``. Uniformity is not required.

    Args:
        max_degree (int): defaults to the height of the graph; degrees above
            the height are 0

    Raises:
        InvalidGraphError: the graph violates the layered condition
    """
    config = config or get_config()
    field = field or config.field_spec()
    _require_valid(graph)
    max_degree = graph.height if max_degree is None else max_degree

    return _graded(graph, max_degree,
                   _breakdown(graph, max_degree, field, config))


@dataclass
class OracleReport(object):
    dims: list
    hilbert_B: list
    breakdown: list
    field: str

    @property
    def matches_hilbert_B(self):
        return self.dims == self.hilbert_B

    def mismatched_degrees(self):
        return [n for n, (a, b) in enumerate(zip(self.dims, self.hilbert_B))
                if a != b]

    def to_dict(self):
        return {
            'dims': list(self.dims),
            'matches_hilbert_B': self.matches_hilbert_B,
            'hilbert_B': list(self.hilbert_B),
            'field': self.field,
            'breakdown': self.breakdown,
        }


def oracle_report(graph, max_degree=None, field=None, config=None):
    """
    Oracle dimensions next to the homological ``hilbert_B`` coefficients.
    """
    config = config or get_config()
    field = field or config.field_spec()
    _require_valid(graph)
    max_degree = graph.height if max_degree is None else max_degree

    breakdown = _breakdown(graph, max_degree, field, config)
    dims = _graded(graph, max_degree, breakdown)

    series = hilbert_B(graph, field, config)
    if max_degree < series.truncation:
        series = series.truncate(max_degree)
    expected = list(series.extend(max_degree).coeffs)

    report = OracleReport(dims, expected, breakdown, field.name)
    if not report.matches_hilbert_B:
        log.warning('Oracle disagrees with hilbert_B in degrees {}'.format(
            report.mismatched_degrees()))
    return report
