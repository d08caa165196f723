"""
Truncated integer power series and the Hilbert series formulas of the
algebras attached to a layered graph.

All Hilbert series quantities are assembled from the reduced cohomology of
the level windows ``Γ_{a,i}``. Those Betti tables are memoized per
``(graph, a, i, field)`` plus the rank settings, and shared by
:func:`hilbert_B`, :func:`inv_hilbert_A` and :func:`numerically_koszul`.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging

from .config import Config, get_config
from .exceptions import (ConsistencyError, HypothesisError, InvalidGraphError,
                         SeriesError)
from .graph import (is_uniform, level_window_subgraph, minimal_vertices,
                    validate)
from .homology import reduced_cohomology_dims
from .utils.decorators import memoize

log = logging.getLogger('series')


class TruncatedSeries(object):
    """
    Integer power series known up to and including ``τ^truncation``.

    Args:
        coeffs (iterable): ``c_0, c_1, ...``; padded with zeros or cut to
            ``truncation + 1`` entries
        truncation (int): highest retained degree; defaults to
            ``len(coeffs) - 1``
    """
    def __init__(self, coeffs, truncation=None):
        coeffs = [int(c) for c in coeffs]
        if truncation is None:
            truncation = max(len(coeffs) - 1, 0)
        if truncation < 0:
            raise SeriesError('Truncation degree must be >= 0')
        coeffs = coeffs[:truncation + 1]
        coeffs += [0] * (truncation + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.truncation = truncation

    @classmethod
    def one(cls, truncation):
        return cls([1], truncation)

    def __getitem__(self, degree):
        if 0 <= degree <= self.truncation:
            return self.coeffs[degree]
        raise IndexError('degree {} beyond truncation {}'.format(
            degree, self.truncation))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.truncation, self.coeffs) == \
            (other.truncation, other.coeffs)

    def __hash__(self):
        return hash((self.truncation, self.coeffs))

    def _check_same(self, other):
        if not isinstance(other, TruncatedSeries):
            raise SeriesError('Expected a TruncatedSeries, got {!r}'.format(
                other))
        if other.truncation != self.truncation:
            raise SeriesError('Truncation mismatch: {} vs {}'.format(
                self.truncation, other.truncation))

    def __add__(self, other):
        self._check_same(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            self.truncation)

    def __sub__(self, other):
        self._check_same(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
            self.truncation)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.truncation)

    def __mul__(self, other):
        return series_mul(self, other)

    def truncate(self, degree):
        return TruncatedSeries(self.coeffs, min(degree, self.truncation))

    def extend(self, degree):
        """
        Same coefficients with a larger truncation, reading missing degrees as
        zero. Only meaningful for polynomials.
        """
        return TruncatedSeries(self.coeffs, max(degree, self.truncation))

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def render(self, var='t'):
        """
        Human readable form such as ``1 + 3t + t^2``.
        """
        terms = []
        for degree, c in enumerate(self.coeffs):
            if not c:
                continue
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                power = var if degree == 1 else '{}^{}'.format(var, degree)
                body = power if magnitude == 1 else '{}{}'.format(
                    magnitude, power)
            if not terms:
                terms.append(body if c > 0 else '-' + body)
            else:
                terms.append(('+ ' if c > 0 else '- ') + body)
        return ' '.join(terms) if terms else '0'

    def to_dict(self):
        return {'coeffs': list(self.coeffs), 'truncation': self.truncation}

    def __str__(self):
        return self.render()

    def __repr__(self):
        return 'TruncatedSeries({!r}, truncation={})'.format(
            list(self.coeffs), self.truncation)


def series_mul(a, b):
    """
    Cauchy product cut at the common truncation degree.

    Raises:
        SeriesError: the truncation degrees differ
    """
    a._check_same(b)
    d = a.truncation
    out = [0] * (d + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(d + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(out, d)


def series_inverse(a):
    """
    Multiplicative inverse up to ``τ^truncation``.

    Raises:
        SeriesError: the constant term is not ``±1``
    """
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise SeriesError(
            'Constant term {} is not invertible over the integers'.format(c0))
    d = a.truncation
    inv = [c0] + [0] * d
    for n in range(1, d + 1):
        acc = sum(a.coeffs[k] * inv[n - k] for k in range(1, n + 1))
        # c0 is its own inverse
        inv[n] = -acc * c0
    return TruncatedSeries(inv, d)


def substitute_neg(a):
    """
    ``f(τ) -> f(-τ)``.
    """
    return TruncatedSeries(
        [-c if i % 2 else c for i, c in enumerate(a.coeffs)], a.truncation)


# ======================================================================
# Hilbert series of B(Γ) and A(Γ)
# ======================================================================

@memoize
def window_betti(graph, a, i, field, sparse_threshold, verify_duality):
    """
    Reduced cohomology of ``Γ_{a,i}``, cached per argument tuple. The rank
    settings are part of the key so a changed config never reuses a table
    computed under another one.
    """
    config = Config()
    config.override(sparse_threshold=sparse_threshold,
                    verify_duality=verify_duality)
    return reduced_cohomology_dims(level_window_subgraph(graph, a, i), field,
                                   config=config)


def _require_valid(graph):
    violations = validate(graph)
    if violations:
        raise InvalidGraphError(violations)


def _warn_if_not_uniform(graph, what):
    report = is_uniform(graph)
    if not report.uniform:
        log.warning('Hypothesis violated: {} assumes a uniform graph; '
                    'failing tails {}. Computing the formula anyway.'.format(
                        what, ', '.join(report.failing_tails)))
    return report


def window_tables(graph, field=None, config=None):
    """
    Betti tables of every ``Γ_{a,i}`` with ``1 <= i <= |a|``.

    Jobs are independent; with ``workers > 1`` they run on a thread pool. The
    result is keyed by ``(a, i)`` and does not depend on scheduling.
    """
    config = config or get_config()
    field = field or config.field_spec()
    jobs = [(a, i) for a in graph.vertices
            for i in range(1, graph.levels[a] + 1)]
    rank = (config.sparse_threshold, config.verify_duality)

    if config.workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            tables = list(pool.map(
                lambda job: window_betti(graph, job[0], job[1], field, *rank),
                jobs))
    else:
        tables = [window_betti(graph, a, i, field, *rank) for a, i in jobs]

    return dict(zip(jobs, tables))


def hilbert_B(graph, field=None, config=None):
    """
    ``h(B(Γ), τ) = 1 + Σ_{|a| >= i >= 1} dim H^{i-2}(Γ_{a,i}) τ^i``,
    truncated at the height ``N``.

    The formula is proven for uniform graphs; for other graphs it is still
    evaluated and a warning is logged.

    Raises:
        InvalidGraphError: the graph violates the layered condition
    """
    _require_valid(graph)
    _warn_if_not_uniform(graph, 'hilbert_B')

    tables = window_tables(graph, field, config)
    coeffs = [1] + [0] * graph.height
    for (a, i), table in tables.items():
        coeffs[i] += table[i - 2]
    return TruncatedSeries(coeffs, graph.height)


def hilbert_B_low_degree(graph):
    """
    Coefficients of ``τ^0 .. τ^3`` of ``h(B(Γ))`` from vertex and edge counts
    only::

        1, |V_+|, Σ_{i>=2} |E_i| - Σ_{i>=2} |V_i|,
        Σ_{|x|>=3} (edges(Γ_{x,3}) - vertices(Γ_{x,3}) + 1)

    Raises:
        HypothesisError: the graph is not uniform, or a vertex at level 2 or
            above has no successors
    """
    _require_valid(graph)
    report = is_uniform(graph)
    if not report.uniform:
        raise HypothesisError(
            'Low degree closed form needs a uniform graph',
            report.failing_tails)
    # dim H^0(Γ_{a,2}) = |S(a)| - 1 needs S(a) non-empty
    stranded = [v for v in minimal_vertices(graph).vertices
                if graph.levels[v] >= 2]
    if stranded:
        raise HypothesisError(
            'Low degree closed form needs successors for every vertex above '
            'level 1; minimal: {}'.format(', '.join(stranded)), stranded)

    upper = [v for v in graph.vertices if graph.levels[v] >= 2]
    edges_upper = sum(1 for t, _ in graph.edge_list if graph.levels[t] >= 2)

    third = 0
    for x in graph.vertices:
        if graph.levels[x] >= 3:
            sub = level_window_subgraph(graph, x, 3)
            third += len(sub.edges) - len(sub.vertices) + 1

    return (1, len(graph.positive_vertices), edges_upper - len(upper), third)


def _alternating(table, top):
    # Σ_{s=0}^{top} (-1)^s dim H^{s-1}
    return sum((-1) ** s * table[s - 1] for s in range(0, top + 1))


def inv_hilbert_A(graph, field=None, config=None):
    """
    ``h(A(Γ), τ)^{-1} = 1 - Σ_{|a| >= i, 0 <= s <= i-1}
    (-1)^s dim H^{s-1}(Γ_{a,i}) τ^i``, truncated at the height ``N``.

    Raises:
        InvalidGraphError: the graph violates the layered condition
    """
    _require_valid(graph)
    _warn_if_not_uniform(graph, 'inv_hilbert_A')

    tables = window_tables(graph, field, config)
    coeffs = [1] + [0] * graph.height
    for (a, i), table in tables.items():
        coeffs[i] -= _alternating(table, i - 1)
    return TruncatedSeries(coeffs, graph.height)


def _unique_bottom(graph):
    report = minimal_vertices(graph)
    if not report.unique or not report.all_level_zero:
        raise HypothesisError(
            'Chain counting needs a unique minimal vertex at level 0; '
            'found {}'.format(', '.join(report.vertices) or 'none'),
            report.vertices)
    return report.vertices[0]


def inv_hilbert_A_chain_count(graph):
    """
    ``h(A(Γ), τ)^{-1}`` from signed chain counts

    ``s_{g,h} = Σ (-1)^l`` over chains ``v_1 > ... > v_l > *`` with
    ``|v_1| = g`` and ``|v_l| = h``; the coefficient of ``τ^i`` is the sum of
    ``s_{g,h}`` over ``g >= i >= g - h + 1``. No linear algebra is involved.

    Raises:
        HypothesisError: the minimal vertex is not unique or not at level 0
    """
    _require_valid(graph)
    bottom = _unique_bottom(graph)

    # signed[v][h]: Σ (-1)^l over chains topped by v with lowest level h
    signed = {}
    for v in graph.vertices:
        if v == bottom:
            continue
        row = {graph.levels[v]: -1}
        for u in graph.below(v):
            if u == bottom:
                continue
            for h, value in signed[u].items():
                row[h] = row.get(h, 0) - value
        signed[v] = row

    s = {}
    for v, row in signed.items():
        g = graph.levels[v]
        for h, value in row.items():
            s[g, h] = s.get((g, h), 0) + value

    coeffs = [1] + [0] * graph.height
    for i in range(1, graph.height + 1):
        coeffs[i] = sum(value for (g, h), value in s.items()
                        if g >= i >= g - h + 1)
    return TruncatedSeries(coeffs, graph.height)


def hilbert_A(graph, degree=None, field=None, config=None):
    """
    ``h(A(Γ), τ)`` up to ``τ^degree`` by inverting :func:`inv_hilbert_A`.
    """
    inverse = inv_hilbert_A(graph, field, config)
    degree = graph.height if degree is None else degree
    if degree < inverse.truncation:
        inverse = inverse.truncate(degree)
    return series_inverse(inverse.extend(degree))


@dataclass
class KoszulReport(object):
    #: degree i (3 <= i <= N) -> Σ_{|a| >= i, 0 <= s <= i-2}
    #: (-1)^s dim H^{s-1}(Γ_{a,i})
    defects: dict
    verdict: bool
    #: substitute_neg(h(B)) == h(A)^{-1} coefficientwise
    series_agrees: bool
    hilbert_B: TruncatedSeries
    inv_hilbert_A: TruncatedSeries

    @property
    def checks_agree(self):
        return self.verdict == self.series_agrees

    def failing_degrees(self):
        return sorted(i for i, d in self.defects.items() if d)

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'defects': {str(i): self.defects[i] for i in sorted(self.defects)},
            'series_agrees': self.series_agrees,
            'checks_agree': self.checks_agree,
            'hilbert_B': self.hilbert_B.to_dict(),
            'inv_hilbert_A': self.inv_hilbert_A.to_dict(),
        }


def check_koszul_hypotheses(graph):
    """
    Raises:
        HypothesisError: the graph is not uniform or has a minimal vertex
            above level 0
    """
    report = is_uniform(graph)
    if not report.uniform:
        raise HypothesisError(
            'Numerical Koszulity test needs a uniform graph',
            report.failing_tails)
    minimal = minimal_vertices(graph)
    if not minimal.all_level_zero:
        off = [v for v in minimal.vertices if graph.levels[v] != 0]
        raise HypothesisError(
            'Minimal vertices off level 0: {}'.format(', '.join(off)), off)


def numerically_koszul(graph, field=None, config=None):
    """
    Decide numerical Koszulity of ``A(Γ)``: every defect
    ``Σ_{|a| >= i, 0 <= s <= i-2} (-1)^s dim H^{s-1}(Γ_{a,i})`` for
    ``3 <= i <= N`` must vanish. The verdict is cross-checked against the
    direct comparison ``h(B, -τ) == h(A, τ)^{-1}``.

    Raises:
        HypothesisError: theorem hypotheses fail
        ConsistencyError: a defect in degree 1 or 2 is nonzero, or the two
            formulations disagree
    """
    _require_valid(graph)
    check_koszul_hypotheses(graph)

    tables = window_tables(graph, field, config)
    all_defects = {i: 0 for i in range(1, graph.height + 1)}
    for (a, i), table in tables.items():
        all_defects[i] += _alternating(table, i - 2)

    for i in (1, 2):
        if all_defects.get(i, 0):
            raise ConsistencyError(
                'Defect in degree {} is {} but must vanish'.format(
                    i, all_defects[i]))

    defects = {i: d for i, d in all_defects.items() if i >= 3}
    verdict = not any(defects.values())

    h_b = hilbert_B(graph, field, config)
    inv_a = inv_hilbert_A(graph, field, config)
    series_agrees = substitute_neg(h_b) == inv_a

    report = KoszulReport(defects, verdict, series_agrees, h_b, inv_a)
    if not report.checks_agree:
        raise ConsistencyError(
            'Defect verdict {} disagrees with series comparison {}'.format(
                verdict, series_agrees))
    log.info('Numerical Koszulity: {} (defects {})'.format(
        verdict, report.failing_degrees() or 'none'))
    return report


def koszul_dual_check(graph, field=None, config=None):
    """
    ``h(A, τ) · h(B, -τ) == 1`` up to ``τ^N``.
    """
    product = series_mul(hilbert_A(graph, None, field, config),
                         substitute_neg(hilbert_B(graph, field, config)))
    return product.is_one()
