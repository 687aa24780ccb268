"""
Data models package
States, channels, observables, records and sweep configurations

Submodules are imported directly (memchan.models.state etc.); state and
observable depend on memchan.linalg, which itself uses memchan.models.matrix.
"""
