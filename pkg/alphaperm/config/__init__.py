from alphaperm.config.config import Config, load_config, get_global_config, set_global_config

__all__ = [
    'Config',
    'load_config',
    'get_global_config',
    'set_global_config',
]
