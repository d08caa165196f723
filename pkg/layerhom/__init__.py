from .config import Config, get_config, set_config
from .exceptions import LayerHomError
from .graph import LayeredGraph

__version__ = '0.1'

__all__ = ['Config', 'LayerHomError', 'LayeredGraph', 'get_config',
           'set_config']
