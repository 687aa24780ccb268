"""
memchan - entropic uncertainty under two-qubit channels with memory
"""

__version__ = '0.1.0'
