#: Modules scanned by the CLI for ``__class_names__``
COMMAND_MODULES = (
    'layerhom.commands.graphs',
    'layerhom.commands.homology',
    'layerhom.commands.series',
    'layerhom.commands.oracle',
)
