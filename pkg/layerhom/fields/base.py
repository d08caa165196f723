import logging

from sympy.polys.matrices import DomainMatrix

#: Matrices with more than this many cells are stored sparsely by default
DEFAULT_SPARSE_THRESHOLD = 4096


class Field(object):
    """
    Exact coefficient field for chain complexes and relation matrices.

    Subclasses pick a sympy domain; all linear algebra goes through
    :class:`sympy.polys.matrices.DomainMatrix` so no floating point is ever
    involved. Matrices are passed around as ``{row: {col: int}}`` dictionaries
    holding only nonzero integer entries.
    """
    log = logging.getLogger('Field')

    @property
    def name(self):
        """
        Label used in JSON documents, ``"Q"`` or ``"Fp(p)"``.
        """
        raise NotImplementedError('{} must implement `name` property'.format(
            self.__class__.__name__))

    @property
    def domain(self):
        raise NotImplementedError('{} must implement `domain` property'.format(
            self.__class__.__name__))

    @property
    def characteristic(self):
        raise NotImplementedError(
            '{} must implement `characteristic` property'.format(
                self.__class__.__name__))

    def convert(self, value):
        return self.domain.convert(value)

    def _reduce(self, entries):
        rows = {}
        for r, row in entries.items():
            converted = {}
            for c, value in row.items():
                element = self.convert(value)
                if element:
                    converted[c] = element
            if converted:
                rows[r] = converted
        return rows

    def matrix(self, entries, shape, sparse=True):
        """
        Build a :class:`DomainMatrix` over this field.

        Args:
            entries (dict): ``{row: {col: int}}`` nonzero entries
            shape (tuple): ``(rows, cols)``
            sparse (bool): keep SDM storage instead of converting to dense

        Returns:
            DomainMatrix: the matrix with entries reduced into the field
        """
        matrix = DomainMatrix(self._reduce(entries), shape, self.domain)
        if not sparse:
            matrix = matrix.to_dense()
        return matrix

    def rank(self, entries, shape, sparse_threshold=DEFAULT_SPARSE_THRESHOLD):
        """
        Exact rank of the matrix given by ``entries``.

        Returns:
            int: rank over this field; 0 for matrices with an empty side
        """
        n_rows, n_cols = shape
        rows = self._reduce(entries)
        if n_rows == 0 or n_cols == 0 or not rows:
            return 0

        sparse = n_rows * n_cols > sparse_threshold
        matrix = DomainMatrix(rows, shape, self.domain)
        if not sparse:
            matrix = matrix.to_dense()
        rank = matrix.rank()
        self.log.debug('rank over {} of {}x{} ({}) = {}'.format(
            self.name, n_rows, n_cols, 'sparse' if sparse else 'dense', rank))
        return rank

    def __str__(self):
        return self.name
