from alphaperm.utils.logger import Logger

__all__ = [
    'Logger'
]
