from collections import namedtuple
import json
import logging

from ..exceptions import HypothesisError
from ..fields import PrimeField, Rationals
from ..graph import is_uniform

#: ``document`` is JSON-ready; ``status`` becomes the exit code
Result = namedtuple('Result', ['document', 'status'])


class Command(object):
    """
    One ``layerhom`` subcommand. Modules under :mod:`layerhom.commands` list
    their command classes in ``__class_names__``; the CLI imports them and
    registers one subparser per class.
    """
    #: subcommand name on the command line
    name = None
    help = None
    #: read a graph from ``--input`` or stdin before :meth:`run`
    needs_graph = True
    supports_both_fields = False

    def __init__(self, config):
        self.log = logging.getLogger(self.__class__.__name__)
        self.config = config

    def add_arguments(self, parser):
        """
        Hook for command specific flags.
        """

    def check_arguments(self, args):
        """
        Hook for flag combinations argparse cannot express. Runs before any
        input is read.

        Returns:
            str: usage error message, or ``None`` when the flags are fine
        """
        return None

    def run(self, args, graph):
        """
        Do the work. ``graph`` is the parsed input graph, or ``None`` for
        commands that do not read one.

        Returns:
            Result: document plus exit status
        """
        raise NotImplementedError('{} must implement `run` method'.format(
            self.__class__.__name__))

    def render(self, document):
        """
        Human readable output. Defaults to indented JSON.
        """
        return json.dumps(document, indent=2, sort_keys=True)

    # ------------------------------------------------------------ helpers

    def ok(self, document):
        return Result(document, 0)

    def fail(self, document):
        return Result(document, 1)

    def fields(self, args):
        """
        Fields to compute over: the configured one, or with
        ``--both-fields`` the rationals and a prime field (``--field`` if it
        names one, else F_2).
        """
        field = self.config.field_spec()
        if not args.both_fields:
            return [field]
        prime = field if isinstance(field, PrimeField) else PrimeField(2)
        return [Rationals(), prime]

    def require_uniform(self, args, graph, what):
        if not args.strict:
            return
        report = is_uniform(graph)
        if not report.uniform:
            raise HypothesisError(
                '{} needs a uniform graph; failing tails {}'.format(
                    what, ', '.join(report.failing_tails)),
                report.failing_tails)
