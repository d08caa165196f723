import configparser
import logging
import os

from .exceptions import LayerHomError
from .fields import parse_field

#: Environment variable naming a config file when ``--config`` is not given
CONFIG_ENV = 'LAYERHOM_CONFIG'

SECTION = 'layerhom'

DEFAULTS = {
    'field': 'q',
    'sparse_threshold': '4096',
    'verify_duality': 'yes',
    'workers': '1',
    'log_level': 'WARNING',
}


class Config(configparser.ConfigParser):
    def __init__(self, config_path=None):
        super().__init__()
        self.log = logging.getLogger(self.__class__.__name__)

        self.read_dict({SECTION: DEFAULTS})

        self.config_path = config_path or os.environ.get(CONFIG_ENV)

        if self.config_path:
            found = self.read(self.config_path)
            if not found:
                raise LayerHomError('Unable to read config file {}'.format(
                    self.config_path))
            self.log.debug('Loaded config from {}'.format(self.config_path))

    def options_as_dict(self, section=SECTION):
        """
        Returns:
           dict: Dictionary of the options defined in this config
        """
        d = dict(self.items(section))
        d['section_name'] = section
        return d

    def override(self, **options):
        """
        Replace options with values given on the command line. ``None``
        values are skipped so unset flags keep the file/default value.
        """
        for key, value in options.items():
            if value is None:
                continue
            if isinstance(value, bool):
                value = 'yes' if value else 'no'
            self.set(SECTION, key, str(value))

    def field_spec(self):
        """
        Returns:
            Field: the arithmetic selected by the ``field`` option
        """
        return parse_field(self.get(SECTION, 'field'))

    @property
    def sparse_threshold(self):
        return self.getint(SECTION, 'sparse_threshold')

    @property
    def verify_duality(self):
        return self.getboolean(SECTION, 'verify_duality')

    @property
    def workers(self):
        return max(1, self.getint(SECTION, 'workers'))

    @property
    def log_level(self):
        return self.get(SECTION, 'log_level').upper()


#: Process-wide settings used when callers do not pass a Config explicitly
_active = None


def get_config():
    global _active
    if _active is None:
        _active = Config()
    return _active


def set_config(config):
    global _active
    _active = config
    return config
