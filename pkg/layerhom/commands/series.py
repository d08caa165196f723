from ..series import (TruncatedSeries, hilbert_A, hilbert_B,
                      hilbert_B_low_degree, inv_hilbert_A,
                      inv_hilbert_A_chain_count, numerically_koszul)
from .base import Command

__class_names__ = ('HilbertB', 'InvHilbertA', 'Koszul')


class HilbertB(Command):
    name = 'hilbert-b'
    help = 'Hilbert series of B(Γ) from window cohomology'
    supports_both_fields = True

    def add_arguments(self, parser):
        parser.add_argument('--low-degree', action='store_true',
                            help='closed form for degrees 0..3 from vertex '
                                 'and edge counts (uniform graphs only)')

    def check_arguments(self, args):
        if args.low_degree and args.both_fields:
            return '--low-degree does not depend on the field; drop ' \
                '--both-fields'
        return None

    def run(self, args, graph):
        if args.low_degree:
            return self.ok({'low_degree': list(hilbert_B_low_degree(graph))})

        self.require_uniform(args, graph, 'hilbert-b')
        fields = self.fields(args)
        if len(fields) == 1:
            return self.ok(hilbert_B(graph, fields[0], self.config).to_dict())

        results = {f.name: hilbert_B(graph, f, self.config) for f in fields}
        return self.ok({
            'fields': {name: s.to_dict() for name, s in results.items()},
            'agree': len(set(results.values())) == 1,
        })

    def render(self, document):
        if 'low_degree' in document:
            return 'h(B) low degree: {}'.format(document['low_degree'])
        if 'fields' in document:
            return '\n'.join(
                ['{}: {}'.format(name, document['fields'][name]['coeffs'])
                 for name in sorted(document['fields'])] +
                ['fields agree: {}'.format(document['agree'])])
        return 'h(B) = {}'.format(_render(document))


def _render(document):
    return TruncatedSeries(document['coeffs'],
                           document['truncation']).render()


class InvHilbertA(Command):
    name = 'inv-hilbert-a'
    help = 'inverse Hilbert series of A(Γ)'
    supports_both_fields = True

    def add_arguments(self, parser):
        parser.add_argument('--chain-count', action='store_true',
                            help='use signed chain counts instead of '
                                 'cohomology (needs a unique bottom)')
        parser.add_argument('--invert', action='store_true',
                            help='also print h(A) up to --max-degree')

    def run(self, args, graph):
        self.require_uniform(args, graph, 'inv-hilbert-a')
        if args.chain_count:
            document = inv_hilbert_A_chain_count(graph).to_dict()
        else:
            fields = self.fields(args)
            results = {f.name: inv_hilbert_A(graph, f, self.config)
                       for f in fields}
            if len(fields) > 1:
                return self.ok({
                    'fields': {n: s.to_dict() for n, s in results.items()},
                    'agree': len(set(results.values())) == 1,
                })
            document = results[fields[0].name].to_dict()

        if args.invert:
            document['hilbert_A'] = hilbert_A(
                graph, args.max_degree, config=self.config).to_dict()
        return self.ok(document)

    def render(self, document):
        if 'fields' in document:
            return '\n'.join(
                ['{}: {}'.format(name, document['fields'][name]['coeffs'])
                 for name in sorted(document['fields'])] +
                ['fields agree: {}'.format(document['agree'])])
        lines = ['h(A)^-1 = {}'.format(_render(document))]
        if 'hilbert_A' in document:
            lines.append('h(A) = {} + O(t^{})'.format(
                _render(document['hilbert_A']),
                document['hilbert_A']['truncation'] + 1))
        return '\n'.join(lines)


class Koszul(Command):
    name = 'koszul'
    help = 'numerical Koszulity of A(Γ)'

    def run(self, args, graph):
        report = numerically_koszul(graph, config=self.config)
        return self.ok(report.to_dict())

    def render(self, document):
        failing = [i for i, d in sorted(document['defects'].items(),
                                        key=lambda kv: int(kv[0])) if d]
        if document['verdict']:
            return 'numerically Koszul'
        return 'not numerically Koszul; nonzero defects in degrees {}'.format(
            ', '.join(failing))
