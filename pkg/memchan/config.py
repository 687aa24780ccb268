"""
Configuration management for memchan
Environment-based configuration with sensible defaults
"""

import logging
import os
from pathlib import Path
from typing import Optional

from memchan.exceptions import ConfigError


class Config:
    """Base configuration class"""

    # Parallelism - MEMCHAN_THREADS caps the sweep worker pool
    THREADS_ENV = 'MEMCHAN_THREADS'
    DEFAULT_MAX_THREADS = 8

    # Output settings
    OUTPUT_DIR = os.environ.get('MEMCHAN_OUTPUT_DIR') or 'figures'

    # Logging
    LOG_LEVEL = os.environ.get('MEMCHAN_LOG_LEVEL') or 'INFO'
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # Verification defaults
    VERIFY_SAMPLES = 100
    VERIFY_SEED = 20140613

    @classmethod
    def thread_count(cls) -> int:
        """Worker count for sweeps, honouring MEMCHAN_THREADS"""
        raw = os.environ.get(cls.THREADS_ENV, '').strip()
        if not raw:
            return max(1, min(os.cpu_count() or 1, cls.DEFAULT_MAX_THREADS))
        try:
            threads = int(raw)
        except ValueError:
            raise ConfigError(cls.THREADS_ENV, f"must be a positive integer, got {raw!r}")
        if threads < 1:
            raise ConfigError(cls.THREADS_ENV, f"must be a positive integer, got {threads}")
        return threads

    @classmethod
    def init_logging(cls, level: Optional[str] = None) -> None:
        """Attach a single stderr handler to the package logger"""
        logger = logging.getLogger('memchan')
        logger.setLevel((level or cls.LOG_LEVEL).upper())
        if not logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter(cls.LOG_FORMAT))
            logger.addHandler(handler)

    @classmethod
    def init_app(cls, output_dir: Optional[str] = None) -> Path:
        """Make sure the output directory exists and return it"""
        path = Path(output_dir or cls.OUTPUT_DIR)
        path.mkdir(parents=True, exist_ok=True)
        return path


class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = os.environ.get('MEMCHAN_LOG_LEVEL') or 'DEBUG'


class ProductionConfig(Config):
    """Production configuration"""

    # Quieter by default
    LOG_LEVEL = os.environ.get('MEMCHAN_LOG_LEVEL') or 'WARNING'


class TestingConfig(Config):
    """Testing configuration"""
    DEFAULT_MAX_THREADS = 2
    VERIFY_SAMPLES = 50
    LOG_LEVEL = 'WARNING'


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': Config
}


def get_config(name: Optional[str] = None):
    """Resolve a config class by name (falls back to MEMCHAN_ENV, then default)"""
    key = name or os.environ.get('MEMCHAN_ENV') or 'default'
    if key not in config:
        raise ConfigError('MEMCHAN_ENV', f"unknown environment {key!r}; "
                                         f"expected one of {sorted(config)}")
    return config[key]
