from ..exceptions import HypothesisError
from ..graph import is_uniform, minimal_vertices, validate
from ..oracle import oracle_report
from ..series import (hilbert_B_low_degree, inv_hilbert_A,
                      inv_hilbert_A_chain_count, numerically_koszul)
from .base import Command

__class_names__ = ('Oracle', 'Report')


class Oracle(Command):
    name = 'oracle'
    help = 'graded dimensions of B(Γ) from its presentation'

    def run(self, args, graph):
        report = oracle_report(graph, args.max_degree, config=self.config)
        document = report.to_dict()
        if args.strict and not report.matches_hilbert_B:
            return self.fail(document)
        return self.ok(document)

    def render(self, document):
        return 'dim B_n: {}\nmatches hilbert_B: {}'.format(
            document['dims'], document['matches_hilbert_B'])


class Report(Command):
    name = 'report'
    help = 'validate, test hypotheses, compute every series and cross-check'

    def run(self, args, graph):
        violations = validate(graph)
        document = {'valid': not violations, 'violations': violations}
        if violations:
            return self.fail(document)

        uniform = is_uniform(graph)
        document['uniform'] = uniform.uniform
        document['failing_tails'] = list(uniform.failing_tails)

        self.log.info('Computing oracle and hilbert_B')
        oracle = oracle_report(graph, args.max_degree, config=self.config)
        document['hilbert_B'] = oracle.hilbert_B
        document['oracle'] = {'dims': oracle.dims,
                              'matches_hilbert_B': oracle.matches_hilbert_B}
        try:
            document['low_degree'] = list(hilbert_B_low_degree(graph))
        except HypothesisError as e:
            self.log.info('Skipping low degree form: {}'.format(e))
            document['low_degree'] = None

        inverse = inv_hilbert_A(graph, config=self.config)
        document['inv_hilbert_A'] = inverse.to_dict()

        routes_agree = True
        minimal = minimal_vertices(graph)
        if minimal.unique and minimal.all_level_zero:
            counted = inv_hilbert_A_chain_count(graph)
            routes_agree = counted == inverse
            document['inv_hilbert_A_chain_count'] = counted.to_dict()

        self.log.info('Checking numerical Koszulity')
        try:
            document['koszul'] = numerically_koszul(
                graph, config=self.config).to_dict()
        except HypothesisError as e:
            document['koszul'] = {'skipped': str(e)}

        document['consistent'] = oracle.matches_hilbert_B and routes_agree
        if not document['consistent']:
            self.log.error('Cross-checks disagree: oracle {}, routes {}'.format(
                oracle.matches_hilbert_B, routes_agree))
            return self.fail(document)
        return self.ok(document)

    def render(self, document):
        if not document['valid']:
            return 'invalid graph:\n' + '\n'.join(
                '  ' + v for v in document['violations'])
        lines = [
            'uniform: {}'.format(document['uniform']),
            'h(B) coefficients: {}'.format(document['hilbert_B']),
            'oracle dims: {} (match: {})'.format(
                document['oracle']['dims'],
                document['oracle']['matches_hilbert_B']),
            'h(A)^-1 coefficients: {}'.format(
                document['inv_hilbert_A']['coeffs']),
        ]
        koszul = document['koszul']
        if 'skipped' in koszul:
            lines.append('koszul: skipped ({})'.format(koszul['skipped']))
        else:
            lines.append('numerically Koszul: {}'.format(koszul['verdict']))
        lines.append('consistent: {}'.format(document['consistent']))
        return '\n'.join(lines)
