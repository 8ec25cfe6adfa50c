import logging
import sys
import time
from contextlib import contextmanager
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Optional, Dict

from alphaperm.utils.formatter import ColoredFormatter, JsonFormatter


class Logger:
    CRITICAL = logging.CRITICAL
    ERROR = logging.ERROR
    WARNING = logging.WARNING
    INFO = logging.INFO
    DEBUG = logging.DEBUG

    _instances: Dict[str, 'Logger'] = {}

    # Process-wide defaults, replaced by configure() from LogConfig
    _defaults = {
        "level": "WARNING",
        "json_format": True,
        "log_dir": None,
        "backup_count": 7,
    }

    def __init__(
            self,
            name: str = "alphaperm",
            level: Optional[str] = None,
            json_format: Optional[bool] = None,
            log_dir: Optional[str] = None,
            backup_count: Optional[int] = None
    ):
        self.name = name
        level = level or Logger._defaults["level"]
        self.level = getattr(logging, level.upper())
        self.json_format = Logger._defaults["json_format"] if json_format is None else json_format
        log_dir = log_dir if log_dir is not None else Logger._defaults["log_dir"]
        self.log_dir = Path(log_dir) if log_dir else None
        self.backup_count = backup_count if backup_count is not None else Logger._defaults["backup_count"]

        self._setup_logger()

        Logger._instances[name] = self

    def _setup_logger(self):
        self.logger = logging.getLogger(f"alphaperm.{self.name}")
        self.logger.setLevel(self.level)
        self.logger.propagate = False

        # Clear existing handlers to avoid duplication
        self.logger.handlers.clear()

        if self.json_format:
            formatter = JsonFormatter()
        else:
            formatter = ColoredFormatter(
                fmt='%(asctime)s | %(levelname)-8s | %(name)s | %(filename)s:%(lineno)d | %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            )

        # File handler only when a log directory is configured
        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)
            file_handler = TimedRotatingFileHandler(
                filename=self.log_dir / f"{self.name}.log",
                when='midnight',
                interval=1,
                backupCount=self.backup_count,
                encoding='utf-8'
            )
            file_handler.suffix = '%Y-%m-%d'
            file_handler.setLevel(self.level)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

        # stdout belongs to the CLI's JSON output
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(self.level)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

    def setLevel(self, level):
        self.level = getattr(logging, level.upper()) if isinstance(level, str) else level
        self.logger.setLevel(self.level)
        for handler in self.logger.handlers:
            handler.setLevel(self.level)

    def debug(self, message: str, **kwargs):
        """Log debug message"""
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs):
        """Log info message"""
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs):
        """Log warning message"""
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs):
        """Log error message"""
        self._log(logging.ERROR, message, **kwargs)

    def exception(self, message: str, **kwargs):
        """Log exception with traceback"""
        kwargs['exc_info'] = True
        self._log(logging.ERROR, message, **kwargs)

    def _log(self, level: int, message: str, **kwargs):
        """Internal logging method with context"""
        extra = {'context': kwargs.get('context', {})}
        self.logger.log(level, message, extra=extra, exc_info=kwargs.get('exc_info', False), stacklevel=3)

    def log_performance(self, operation: str, duration: float, **kwargs):
        """Log performance metrics"""
        level = logging.WARNING if duration > 1.0 else logging.INFO
        context = {'operation': operation, 'duration': round(duration, 6)}
        context.update(kwargs.pop('context', {}))
        self._log(level, f"Performance: {operation} took {duration:.3f}s", context=context, **kwargs)

    @contextmanager
    def timed(self, operation: str, **context):
        """Time a block and report it through log_performance"""
        start = time.perf_counter()
        try:
            yield
        finally:
            self.log_performance(operation, time.perf_counter() - start, context=context)

    @classmethod
    def configure(cls, level: str = "WARNING", json_format: bool = True, log_dir: Optional[str] = None,
                  backup_count: int = 7):
        """Set process-wide defaults and rebuild every cached instance"""
        cls._defaults.update(level=level, json_format=json_format, log_dir=log_dir, backup_count=backup_count)
        for name in list(cls._instances):
            cls(name=name)

    @classmethod
    def get_logger(cls, name: str = "alphaperm") -> 'Logger':
        """Get existing logger instance or create new one"""
        if name in cls._instances:
            return cls._instances[name]
        return cls(name=name)
