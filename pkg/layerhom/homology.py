"""
Order complex machinery for finite posets given as layered graphs or induced
subgraphs of them.

An ``i``-chain is a strictly increasing tuple ``(x_0 < ... < x_i)``; the empty
tuple is the single ``(-1)``-chain and is always materialized, so reduced
(co)homology needs no special cases. Ranks are computed exactly over the
configured field.
"""
from collections import namedtuple
from dataclasses import dataclass, field as dc_field
import logging

from .config import get_config
from .exceptions import ConsistencyError

log = logging.getLogger('homology')

EMPTY_CHAIN = ()

#: Labels for the adjoined bottom and top elements in Cohen-Macaulay reports
HAT_ZERO = '<0>'
HAT_ONE = '<1>'


class CohenMacaulayReport(
        namedtuple('CohenMacaulayReport', ['cohen_macaulay', 'failures'])):
    __slots__ = ()

    def __bool__(self):
        return self.cohen_macaulay


class ChainTable(object):
    """
    Every chain of a poset up to ``max_degree``, grouped by degree.

    ``chains[i]`` lists the ``i``-chains sorted by the ``(level, id)`` keys of
    their entries; ``index[i]`` maps a chain back to its position. Degree -1
    always holds just the empty chain.
    """
    def __init__(self, poset, max_degree=None):
        self.poset = poset
        self.chains = {-1: [EMPTY_CHAIN]}

        ups = {x: [y for y in poset.vertices if poset.less(x, y)]
               for x in poset.vertices}

        found = {}

        def extend(chain):
            degree = len(chain) - 1
            found.setdefault(degree, []).append(chain)
            if max_degree is not None and degree >= max_degree:
                return
            for y in ups[chain[-1]]:
                extend(chain + (y,))

        if max_degree is None or max_degree >= 0:
            for x in poset.vertices:
                extend((x,))

        for degree in sorted(found):
            self.chains[degree] = sorted(
                found[degree],
                key=lambda c: tuple(poset.sort_key(v) for v in c))

        #: longest chain length l(P); -1 for the empty poset
        self.length = max(self.chains)
        self.max_degree = self.length if max_degree is None else max_degree

        self.index = {
            degree: {c: pos for pos, c in enumerate(chains)}
            for degree, chains in self.chains.items()}

    def __getitem__(self, degree):
        return self.chains.get(degree, [])

    def count(self, degree):
        return len(self.chains.get(degree, []))

    def counts(self):
        """
        Returns:
            list: ``|Ch_{-1}|, |Ch_0|, ..., |Ch_{l(P)}|``
        """
        return [self.count(i) for i in range(-1, self.length + 1)]


def enumerate_chains(poset, max_degree=None):
    return ChainTable(poset, max_degree)


def face(chain, l):
    """
    ``g^l``: the chain with its ``l``-th entry removed.

    Raises:
        IndexError: ``l`` is not a position of ``chain``
    """
    if not 0 <= l < len(chain):
        raise IndexError('face index {} out of range for a {}-chain'.format(
            l, len(chain) - 1))
    return chain[:l] + chain[l + 1:]


def boundary_entries(chains, i):
    """
    Nonzero entries of ``d_i`` as ``{row: {col: ±1}}`` with rows indexed by
    ``(i-1)``-chains and columns by ``i``-chains.

    Returns:
        tuple: ``(entries, shape)``
    """
    rows_index = chains.index.get(i - 1, {})
    cols = chains[i]
    shape = (len(rows_index), len(cols))
    entries = {}
    if i < 0 or not rows_index:
        # no (i-1)-chains: d_i = 0
        return entries, shape

    for col, chain in enumerate(cols):
        for l in range(len(chain)):
            row = rows_index[face(chain, l)]
            sign = -1 if l % 2 else 1
            entries.setdefault(row, {})[col] = sign
    return entries, shape


def transpose(entries):
    flipped = {}
    for r, row in entries.items():
        for c, value in row.items():
            flipped.setdefault(c, {})[r] = value
    return flipped


def boundary_matrix(chains, i, field=None):
    """
    ``d_i`` as a sympy ``DomainMatrix`` over ``field``.
    """
    field = field or get_config().field_spec()
    entries, shape = boundary_entries(chains, i)
    return field.matrix(entries, shape)


def coboundary_matrix(chains, i, field=None):
    """
    ``∂^i``, the dual of ``d_i``: rows ``i``-chains, columns ``(i-1)``-chains.
    """
    field = field or get_config().field_spec()
    entries, shape = boundary_entries(chains, i)
    return field.matrix(transpose(entries), (shape[1], shape[0]))


@dataclass(frozen=True)
class BettiTable(object):
    """
    Dimensions of reduced (co)homology for degrees ``-1 .. l(P)``.
    Degrees outside that range are absent and read as 0.
    """
    dims: dict
    field: object
    kind: str = 'cohomology'
    ranks: dict = dc_field(default_factory=dict, compare=False)

    def __getitem__(self, degree):
        return self.dims.get(degree, 0)

    @property
    def degrees(self):
        return sorted(self.dims)

    def euler(self):
        """
        Alternating sum ``Σ (-1)^i dim H̃^i``; equals the Möbius function.
        """
        return sum((-1) ** (i % 2) * d for i, d in self.dims.items())

    def nonzero(self):
        return {i: d for i, d in self.dims.items() if d}

    def to_dict(self):
        return {
            'field': self.field.name,
            'dims': {str(i): self.dims[i] for i in self.degrees},
        }


def _ranks(chains, field, transposed, config):
    ranks = {}
    for i in range(0, chains.length + 1):
        entries, shape = boundary_entries(chains, i)
        if transposed:
            entries, shape = transpose(entries), (shape[1], shape[0])
        ranks[i] = field.rank(entries, shape, config.sparse_threshold)
    return ranks


def _dims(chains, ranks):
    return {
        i: chains.count(i) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i in range(-1, chains.length + 1)}


def reduced_cohomology_dims(poset, field=None, chains=None, config=None):
    """
    ``dim H̃^i(P;F) = dim ker ∂^{i+1} - rank ∂^i`` for ``-1 <= i <= l(P)``.

    When the ``verify_duality`` option is on, the ranks of ``d_i`` are computed
    as well and must agree with those of ``∂^i``.

    Raises:
        ConsistencyError: homology and cohomology dimensions disagree
    """
    config = config or get_config()
    field = field or config.field_spec()
    chains = chains or enumerate_chains(poset)

    co_ranks = _ranks(chains, field, True, config)
    dims = _dims(chains, co_ranks)

    if config.verify_duality:
        ranks = _ranks(chains, field, False, config)
        if ranks != co_ranks:
            raise ConsistencyError(
                'rank(d_i) != rank(d_i^T) over {}: {} vs {}'.format(
                    field.name, ranks, co_ranks))

    log.debug('H^* of {} over {}: {}'.format(poset, field.name, dims))
    return BettiTable(dims, field, 'cohomology', co_ranks)


def reduced_homology_dims(poset, field=None, chains=None, config=None):
    """
    ``dim H̃_i(P;F) = dim ker d_i - rank d_{i+1}``.
    """
    config = config or get_config()
    field = field or config.field_spec()
    chains = chains or enumerate_chains(poset)
    ranks = _ranks(chains, field, False, config)
    return BettiTable(_dims(chains, ranks), field, 'homology', ranks)


def compare_fields(poset, fields, config=None):
    """
    Cohomology of ``poset`` over each field in ``fields``. Agreement is
    reported, never required.

    Returns:
        tuple: ``({field name: BettiTable}, agree)``
    """
    chains = enumerate_chains(poset)
    tables = {f.name: reduced_cohomology_dims(poset, f, chains, config)
              for f in fields}
    values = [t.dims for t in tables.values()]
    agree = all(v == values[0] for v in values)
    if not agree:
        log.info('Betti numbers depend on the field: {}'.format(
            {name: t.nonzero() for name, t in tables.items()}))
    return tables, agree


def chain_counts(poset):
    return enumerate_chains(poset).counts()


def reduced_euler_characteristic(poset):
    """
    ``Σ_{i >= -1} (-1)^i |Ch_i(P)|`` from chain counts alone.
    """
    return sum((-1) ** ((i - 1) % 2) * c
               for i, c in enumerate(chain_counts(poset)))


def linear_extension(poset):
    """
    Vertices ordered so that every element comes after everything below it.
    """
    members = poset.vertices
    return sorted(members, key=lambda x: (
        sum(1 for z in members if poset.less(z, x)), poset.sort_key(x)))


def mobius(poset):
    """
    ``μ(P) = μ(0̂, 1̂)`` in ``P`` with a bottom and top adjoined, counted as
    ``c_0 - c_1 + c_2 - ...`` where ``c_i`` is the number of ``i``-chains
    ``0̂ = x_0 < ... < x_i = 1̂``.
    """
    # ending[x][k]: chains of P with k elements whose largest element is x
    ending = {}
    for x in linear_extension(poset):
        counts = [0, 1]
        for z in ending:
            if poset.less(z, x):
                for k, c in enumerate(ending[z]):
                    if k + 1 >= len(counts):
                        counts.append(0)
                    counts[k + 1] += c
        ending[x] = counts

    # c[i] for chains in P-hat: k elements of P give an (k+1)-chain
    c = {1: 1}
    for counts in ending.values():
        for k, n in enumerate(counts):
            if k and n:
                c[k + 1] = c.get(k + 1, 0) + n
    return sum((-1) ** (i % 2) * n for i, n in c.items())


def order_dimension(poset):
    """
    ``dim Δ(P)``: length of the longest chain, -1 when ``P`` is empty.
    """
    longest = {}
    for x in linear_extension(poset):
        longest[x] = 1 + max(
            [longest[z] for z in longest if poset.less(z, x)], default=-1)
    return max(longest.values(), default=-1)


def _vanishes_below_top(sub, field, config):
    dim = order_dimension(sub)
    table = reduced_cohomology_dims(sub, field, config=config)
    bad = sorted(i for i in table.degrees if i < dim and table[i])
    return bad


def is_cohen_macaulay(poset, field=None, strict=False, config=None):
    """
    Check that every open interval ``(x, y)`` of ``poset`` has vanishing
    reduced homology below the dimension of its order complex.

    With ``strict`` the intervals of ``P`` with bottom and top adjoined are
    checked too: the whole poset and every principal down-set and up-set.

    Returns:
        CohenMacaulayReport: truthy flag plus ``(x, y, degrees)`` failures
    """
    config = config or get_config()
    field = field or config.field_spec()
    owner = poset._owner
    members = set(poset.vertices)

    candidates = []
    for y in poset.vertices:
        for x in poset.vertices:
            if poset.less(x, y):
                candidates.append((x, y, [z for z in owner.below(y)
                                          if z in members
                                          and owner.less(x, z)]))
    if strict:
        for v in poset.vertices:
            candidates.append((HAT_ZERO, v, [z for z in owner.below(v)
                                             if z in members]))
            candidates.append((v, HAT_ONE, [z for z in owner.above(v)
                                            if z in members]))
        candidates.append((HAT_ZERO, HAT_ONE, list(poset.vertices)))

    failures = []
    for x, y, inside in candidates:
        bad = _vanishes_below_top(owner.subgraph(inside), field, config)
        if bad:
            failures.append((x, y, tuple(bad)))

    return CohenMacaulayReport(not failures, tuple(failures))
