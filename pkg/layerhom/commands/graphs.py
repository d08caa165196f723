from ..generators import FAMILIES, parse_family
from ..graph import is_uniform, minimal_vertices, validate
from .base import Command

__class_names__ = ('Validate', 'Uniform', 'Generate')


class Validate(Command):
    name = 'validate'
    help = 'check the layered condition on every edge'

    def run(self, args, graph):
        violations = validate(graph)
        document = {
            'valid': not violations,
            'violations': violations,
            'vertices': len(graph.vertices),
            'edges': len(graph.edges),
            'height': graph.height,
        }
        if violations:
            self.log.info('{} violation(s)'.format(len(violations)))
            return self.fail(document)
        return self.ok(document)

    def render(self, document):
        if document['valid']:
            return 'valid: {} vertices, {} edges, height {}'.format(
                document['vertices'], document['edges'], document['height'])
        return '\n'.join(['invalid:'] + ['  ' + v
                                         for v in document['violations']])


class Uniform(Command):
    name = 'uniform'
    help = 'test uniformity and report minimal vertices'

    def run(self, args, graph):
        report = is_uniform(graph)
        minimal = minimal_vertices(graph)
        document = {
            'uniform': report.uniform,
            'failing_tails': list(report.failing_tails),
            'minimal_vertices': list(minimal.vertices),
            'minimal_all_level_zero': minimal.all_level_zero,
            'unique_minimal': minimal.unique,
        }
        if args.strict and not report.uniform:
            return self.fail(document)
        return self.ok(document)

    def render(self, document):
        if document['uniform']:
            line = 'uniform'
        else:
            line = 'not uniform; failing tails: {}'.format(
                ', '.join(document['failing_tails']))
        return '{}\nminimal vertices: {}'.format(
            line, ', '.join(document['minimal_vertices']) or 'none')


class Generate(Command):
    name = 'generate'
    help = 'write a graph from one of the built-in families'
    needs_graph = False

    def add_arguments(self, parser):
        parser.add_argument('family', choices=FAMILIES)
        parser.add_argument('params', nargs='*',
                            help='integer parameters; random families take '
                                 'SEED then level sizes top first')

    def run(self, args, graph):
        spec = parse_family(args.family, args.params)
        self.log.info('Generating {} {}'.format(spec.family, spec.params))
        # human output is the default indented JSON so it still pipes
        return self.ok(spec.build().to_dict())
