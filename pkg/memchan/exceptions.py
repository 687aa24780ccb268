"""
Error hierarchy for memchan
Validation problems are ValueErrors so callers can catch them the usual way
"""

from typing import Optional, Tuple


class MemchanError(Exception):
    """Base class for all memchan errors"""
    pass


class BadDimension(MemchanError, ValueError):
    """Matrix has the wrong shape for the requested operation"""
    pass


class BadParameter(MemchanError, ValueError):
    """A scalar parameter lies outside its allowed range"""
    pass


class NonHermitianInput(MemchanError, ValueError):
    """Eigensolver input failed the Hermiticity check"""

    def __init__(self, deviation: float):
        self.deviation = deviation
        super().__init__(f"Matrix is not Hermitian: max |A - A^dagger| = {deviation:.3e}")


class NoConvergence(MemchanError, RuntimeError):
    """Jacobi sweeps did not drive the off-diagonal norm below threshold"""

    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(f"Jacobi iteration did not converge after {sweeps} sweeps "
                         f"(off-diagonal residual {residual:.3e})")


class UnphysicalState(MemchanError, ValueError):
    """Density matrix fails positivity (or trace) within tolerance"""

    def __init__(self, message: str, eigenvalue: Optional[float] = None,
                 grid_point: Optional[Tuple[float, float]] = None):
        self.eigenvalue = eigenvalue
        self.grid_point = grid_point
        if grid_point is not None:
            message = f"{message} at (mu={grid_point[0]:g}, D={grid_point[1]:g})"
        super().__init__(message)


class UnsupportedInput(MemchanError, ValueError):
    """Input outside the domain an analytic formula is written for"""
    pass


class ConfigError(MemchanError, ValueError):
    """Invalid sweep configuration; `field` names the offending entry"""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class InvariantViolation(MemchanError, RuntimeError):
    """A computed record broke one of the guaranteed inequalities"""
    pass


class OutputError(MemchanError, OSError):
    """Writing an output file failed"""
    pass
