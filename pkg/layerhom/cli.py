"""
``layerhom`` command line. Every subcommand reads a graph document from
``--input`` or stdin (``generate`` writes one), so commands chain through
pipes::

    layerhom generate boolean 3 | layerhom hilbert-b --json
"""
import argparse
from importlib import import_module
import json
import logging
import sys

from .commands import COMMAND_MODULES
from .config import Config, set_config
from .exceptions import LayerHomError
from .graph import LayeredGraph
from .series import window_betti

log = logging.getLogger('layerhom')

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def load_commands(config):
    """
    Instantiate every command class named in the ``__class_names__`` of the
    command modules.
    """
    commands = []
    for module_name in COMMAND_MODULES:
        module = import_module(module_name)
        for class_name in module.__class_names__:
            commands.append(getattr(module, class_name)(config))
    return commands


def _common_arguments():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='INI file with a [layerhom] section')
    common.add_argument('--log-level', help='DEBUG, INFO, WARNING or ERROR')
    common.add_argument('--json', action='store_true',
                        help='machine readable output with sorted keys')
    common.add_argument('--input', help='graph JSON file; stdin by default')
    common.add_argument('--field', help='q (default) or p:PRIME')
    common.add_argument('--both-fields', action='store_true',
                        help='compute over Q and a prime field and compare')
    common.add_argument('--max-degree', type=int,
                        help='truncation for h(A) and oracle depth')
    common.add_argument('--strict', action='store_true',
                        help='refuse inputs that break theorem hypotheses')
    common.add_argument('--workers', type=int,
                        help='threads for independent cohomology jobs')
    return common


def build_parser(commands):
    parser = argparse.ArgumentParser(
        prog='layerhom',
        description='Order homology of layered graphs and the Hilbert series '
                    'of their algebras.')
    common = _common_arguments()
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    for command in commands:
        p = sub.add_parser(command.name, help=command.help, parents=[common])
        command.add_arguments(p)
        p.set_defaults(handler=command)
    return parser


def read_graph(args):
    if args.input:
        try:
            with open(args.input) as f:
                text = f.read()
        except OSError as e:
            raise LayerHomError('Unable to read {}: {}'.format(args.input, e))
    else:
        text = sys.stdin.read()
    return LayeredGraph.from_json(text)


def _configure(args):
    config = Config(args.config)
    config.override(field=args.field, workers=args.workers,
                    log_level=args.log_level)
    # validates --field early so a bad value is a domain error
    config.field_spec()

    logging.basicConfig(
        level=getattr(logging, config.log_level, logging.WARNING),
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
        force=True)
    log.debug('Effective configuration: {}'.format(config.options_as_dict()))
    return set_config(config)


def main(argv=None):
    # commands read config lazily, so a placeholder is enough for parsing
    commands = load_commands(None)
    parser = build_parser(commands)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    command = args.handler
    if args.both_fields and not command.supports_both_fields:
        message = '--both-fields is not supported by {}'.format(command.name)
    else:
        message = command.check_arguments(args)
    if message:
        parser.print_usage(sys.stderr)
        sys.stderr.write('layerhom: error: {}\n'.format(message))
        return EXIT_USAGE

    window_betti.clear()
    try:
        command.config = _configure(args)
        graph = read_graph(args) if command.needs_graph else None
        result = command.run(args, graph)
    except LayerHomError as e:
        log.error('{}: {}'.format(e.__class__.__name__, e))
        if args.json:
            print(json.dumps({'error': e.__class__.__name__,
                              'message': str(e)}, sort_keys=True))
        return EXIT_DOMAIN

    if args.json:
        print(json.dumps(result.document, sort_keys=True))
    else:
        print(command.render(result.document))
    return result.status


if __name__ == '__main__':
    sys.exit(main())
