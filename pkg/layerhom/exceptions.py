class LayerHomError(Exception):
    """
    Base class for every error raised on purpose by layerhom. The CLI turns
    these into exit code 1.
    """


class GraphFormatError(LayerHomError):
    pass


class UnknownVertexError(LayerHomError, KeyError):
    def __init__(self, vertex):
        super().__init__('Unknown vertex id: {!r}'.format(vertex))
        self.vertex = vertex

    def __str__(self):
        return self.args[0]


class InvalidGraphError(LayerHomError):
    def __init__(self, violations):
        super().__init__('Graph is not a valid layered graph: {}'.format(
            '; '.join(violations)))
        self.violations = list(violations)


class HypothesisError(LayerHomError):
    """
    A theorem hypothesis does not hold for the input. ``failures`` lists the
    offending vertices (or a short description) so callers can report them.
    """
    def __init__(self, message, failures=None):
        super().__init__(message)
        self.failures = list(failures or [])


class SeriesError(LayerHomError):
    pass


class FieldError(LayerHomError):
    pass


class FamilyError(LayerHomError):
    pass


class ConsistencyError(LayerHomError):
    pass
