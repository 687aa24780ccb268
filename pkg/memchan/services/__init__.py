"""
Service layer package
Channel evolution, uncertainty evaluation and the sweep, export and verification services
"""

from memchan.services.sweep_service import SweepService, run_sweep
from memchan.services.export_service import ExportService
from memchan.services.verification_service import VerificationService, VerificationReport

__all__ = [
    'SweepService',
    'run_sweep',
    'ExportService',
    'VerificationService',
    'VerificationReport'
]
