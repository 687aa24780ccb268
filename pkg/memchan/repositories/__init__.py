"""
Repository pattern implementations
File access layer for configurations and results
"""

from memchan.repositories.base_repository import FileRepository
from memchan.repositories.sweep_config_repository import SweepConfigRepository
from memchan.repositories.record_repository import RecordRepository

__all__ = [
    'FileRepository',
    'SweepConfigRepository',
    'RecordRepository'
]
