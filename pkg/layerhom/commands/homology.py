from ..exceptions import LayerHomError
from ..graph import level_window_subgraph
from ..homology import (chain_counts, compare_fields, is_cohen_macaulay,
                        mobius, reduced_cohomology_dims)
from .base import Command

__class_names__ = ('Homology', 'Mobius', 'CohenMacaulay')


def _add_window_arguments(parser):
    parser.add_argument('--vertex', metavar='A',
                        help='use the window Γ_{A,I} below vertex A')
    parser.add_argument('--window', metavar='I', type=int,
                        help='window depth I (with --vertex)')


def _check_window_arguments(args):
    if (args.vertex is None) != (args.window is None):
        return '--vertex and --window go together'
    return None


def _poset(args, graph):
    message = _check_window_arguments(args)
    if message:
        raise LayerHomError(message)
    if args.vertex is None:
        return graph
    return level_window_subgraph(graph, args.vertex, args.window)


class Homology(Command):
    name = 'homology'
    help = 'reduced order cohomology of the graph poset or a window'
    supports_both_fields = True

    def add_arguments(self, parser):
        _add_window_arguments(parser)

    def check_arguments(self, args):
        return _check_window_arguments(args)

    def run(self, args, graph):
        poset = _poset(args, graph)
        fields = self.fields(args)
        document = {'chain_counts': chain_counts(poset)}

        if len(fields) == 1:
            table = reduced_cohomology_dims(poset, fields[0],
                                            config=self.config)
            document.update(table.to_dict())
        else:
            tables, agree = compare_fields(poset, fields, self.config)
            document['fields'] = {name: t.to_dict()['dims']
                                  for name, t in tables.items()}
            document['agree'] = agree
        return self.ok(document)

    def render(self, document):
        lines = ['chain counts: {}'.format(document['chain_counts'])]
        if 'fields' in document:
            for name in sorted(document['fields']):
                lines.append('{}: {}'.format(name, document['fields'][name]))
            lines.append('fields agree: {}'.format(document['agree']))
        else:
            lines.append('H^i over {}: {}'.format(
                document['field'], document['dims']))
        return '\n'.join(lines)


class Mobius(Command):
    name = 'mobius'
    help = 'Möbius function of the poset with bottom and top adjoined'

    def add_arguments(self, parser):
        _add_window_arguments(parser)

    def check_arguments(self, args):
        return _check_window_arguments(args)

    def run(self, args, graph):
        poset = _poset(args, graph)
        value = mobius(poset)
        euler = reduced_cohomology_dims(poset, config=self.config).euler()
        return self.ok({'mobius': value, 'euler_characteristic': euler})

    def render(self, document):
        return 'mu = {} (reduced Euler characteristic {})'.format(
            document['mobius'], document['euler_characteristic'])


class CohenMacaulay(Command):
    name = 'cm-check'
    help = 'check vanishing homology of open intervals'

    def add_arguments(self, parser):
        _add_window_arguments(parser)

    def check_arguments(self, args):
        return _check_window_arguments(args)

    def run(self, args, graph):
        poset = _poset(args, graph)
        report = is_cohen_macaulay(poset, strict=args.strict,
                                   config=self.config)
        return self.ok({
            'cohen_macaulay': report.cohen_macaulay,
            'failures': [{'x': x, 'y': y, 'degrees': list(degrees)}
                         for x, y, degrees in report.failures],
        })

    def render(self, document):
        if document['cohen_macaulay']:
            return 'Cohen-Macaulay'
        return '\n'.join(
            ['not Cohen-Macaulay:'] +
            ['  ({}, {}) nonzero in degrees {}'.format(
                f['x'], f['y'], f['degrees']) for f in document['failures']])
