"""Deterministic seeded randomness for verification campaigns.

A 64-bit counter-based stream (SplitMix64 output function) feeds
Box-Muller normals, so a campaign's trial set depends only on the 64-bit
seed, never on library versions or evaluation order.  Trial k of a
campaign draws from the sub-seed ``seed ^ k``, which makes campaigns
embarrassingly parallel with order-independent aggregation.
"""

from __future__ import annotations

import numpy as np

MASK64 = np.uint64(0xFFFFFFFFFFFFFFFF)
_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_INV_2_53 = float(2.0 ** -53)


def sub_seed(seed: int, trial: int) -> int:
    """Sub-seed for trial `trial` of a campaign with master seed `seed`."""
    return (int(seed) ^ int(trial)) & 0xFFFFFFFFFFFFFFFF


class RandomStream:
    """Deterministic stream of uniforms and Gaussians from a 64-bit seed."""

    def __init__(self, seed: int):
        self._seed = np.uint64(int(seed) & 0xFFFFFFFFFFFFFFFF)
        self._counter = 0

    def _raw(self, count: int) -> np.ndarray:
        idx = np.arange(self._counter + 1, self._counter + count + 1, dtype=np.uint64)
        self._counter += count
        with np.errstate(over="ignore"):
            z = self._seed + idx * _GAMMA
            z = (z ^ (z >> np.uint64(30))) * _MIX1
            z = (z ^ (z >> np.uint64(27))) * _MIX2
            return z ^ (z >> np.uint64(31))

    def uniforms(self, count: int) -> np.ndarray:
        """`count` uniforms in [0, 1) with 53-bit resolution."""
        return (self._raw(count) >> np.uint64(11)).astype(np.float64) * _INV_2_53

    def normals(self, count: int) -> np.ndarray:
        """`count` standard normals via the Box-Muller transform."""
        pairs = (count + 1) // 2
        # u1 shifted into (0, 1] so the log is finite.
        u1 = (self._raw(pairs) >> np.uint64(11)).astype(np.float64)
        u1 = (u1 + 1.0) * _INV_2_53
        u2 = self.uniforms(pairs)
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = (2.0 * np.pi) * u2
        out = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])
        return out[:count]

    def gaussian_matrix(self, n: int) -> np.ndarray:
        return self.normals(n * n).reshape(n, n)

    def symmetric_matrix(self, n: int) -> np.ndarray:
        """Gaussian matrix symmetrized via (M + M^T)/2."""
        g = self.gaussian_matrix(n)
        return 0.5 * (g + g.T)

    def symmetric_tuple(self, n: int, m: int) -> list[np.ndarray]:
        return [self.symmetric_matrix(n) for _ in range(m)]

    def orthogonal_matrix(self, n: int) -> np.ndarray:
        """Haar-ish orthogonal matrix: QR of a Gaussian with sign-fixed R."""
        q, r = np.linalg.qr(self.gaussian_matrix(n))
        signs = np.sign(np.diag(r))
        signs[signs == 0] = 1.0
        return q * signs
