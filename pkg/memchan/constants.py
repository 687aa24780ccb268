"""
Numerical constants and fixed tables for memchan
"""

import numpy as np

# Tolerances (part of the public contract)
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-8
CLIP_BUDGET = 1e-8
JACOBI_THRESHOLD = 1e-14
JACOBI_MAX_SWEEPS = 64
ARITHMETIC_TOL = 1e-12
ORACLE_TOL = 1e-9
INEQUALITY_SLACK = 1e-7
PURITY_SLACK = 1e-9

# Pauli matrices, index 0 is the identity
SIGMA_0 = np.array([[1, 0], [0, 1]], dtype=np.complex128)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3)

# Sweep output
CSV_COLUMNS = ['channel', 'mu', 'D', 'lhs', 'rhs', 's_xB', 's_zB', 'purity',
               'mu_lhs', 'mu_rhs', 'table2_maxdev']
CSV_FLOAT_FORMAT = '%.12g'

# Built-in figure settings
FIGURE_MU_VALUES = (0.0, 0.5, 1.0)
FIGURE_CORRELATIONS = (0.5, -0.5, 0.5)
FIGURE_D_STEPS = 201
