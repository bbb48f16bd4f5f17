import numpy as np


def eij(n: int, i: int, j: int) -> np.ndarray:
    """Standard basis matrix E_ij (0-based indices)."""
    m = np.zeros((n, n))
    m[i, j] = 1.0
    return m


def offdiag2(v: float, n: int = 2) -> np.ndarray:
    """Symmetric matrix with v at (0,1) and (1,0), zero elsewhere."""
    m = np.zeros((n, n))
    m[0, 1] = m[1, 0] = v
    return m
