"""Polar code definition, Kronecker-power math and frozen-set construction."""

import functools

import numpy as np

KERNEL = np.array([[1, 0], [1, 1]], dtype=np.uint8)

# Dense Kronecker powers are capped; beyond this the graph encoder must be used.
MAX_DENSE_N = 2 ** 14


class PolarCode:
    """
    A polar code of length ``N = 2**n`` defined by its frozen-bit positions.

    Parameters
    ----------
    n : int
        Log2 of the code length, ``n >= 1``.
    frozen : iterable of int
        Indices in ``[0, N)`` forced to zero. The dimension is
        ``K = N - len(frozen)``. An all-frozen code (``K = 0``) is allowed.
    """

    def __init__(self, n, frozen):
        if n < 1:
            raise ValueError(f"n must be a positive integer, got {n}")
        self.n = int(n)
        self.N = 1 << self.n

        frozen = np.asarray(sorted(set(int(i) for i in frozen)), dtype=np.int64)
        if frozen.size and (frozen[0] < 0 or frozen[-1] >= self.N):
            raise ValueError("frozen indices out of range")
        self.frozen = frozen
        self.K = self.N - frozen.size

        self.frozen_mask = np.zeros(self.N, dtype=bool)
        self.frozen_mask[frozen] = True
        self.info_indices = np.flatnonzero(~self.frozen_mask)

    @property
    def rate(self):
        return self.K / self.N

    def __repr__(self):
        return f"PolarCode(N={self.N}, K={self.K})"

    def __eq__(self, other):
        return (
            isinstance(other, PolarCode)
            and self.n == other.n
            and np.array_equal(self.frozen, other.frozen)
        )


@functools.lru_cache(maxsize=32)
def _kron_cached(n):
    m = np.array([[1]], dtype=np.uint8) if n == 0 else KERNEL.copy()
    for _ in range(n - 1):
        m = np.kron(m, KERNEL)
    m.flags.writeable = False
    return m


def kronecker_power(n, max_n=14):
    """
    Return the n-th Kronecker power of the 2x2 kernel [[1,0],[1,1]].

    ``n = 0`` gives the 1x1 identity. The result is a read-only uint8
    array of shape ``(2**n, 2**n)``.

    Raises
    ------
    ValueError
        If ``n`` is negative or ``2**n`` exceeds the dense-matrix cap.
    """
    if n < 0:
        raise ValueError(f"Kronecker order must be non-negative, got {n}")
    if n > max_n:
        raise ValueError(f"2**{n} exceeds the dense-matrix cap 2**{max_n}")
    return _kron_cached(n)


def branch_indicator(i, j):
    """
    Tell whether edge ``(i, j)`` of the decoding graph lies on an odd branch.

    Returns ``floor(i / 2**j) mod 2``: 0 for check-node (f) edges, 1 for
    edges whose update consumes a partial sum (g).
    """
    if i < 0 or j < 0:
        raise ValueError(f"indices must be non-negative, got ({i}, {j})")
    return (i >> j) & 1


def bec_erasure_probs(n, epsilon):
    """
    Per-bit-channel erasure probabilities for a length ``2**n`` code on a
    binary erasure channel with erasure probability ``epsilon``.

    Each polarization level maps a channel with parameter z to the pair
    ``(2z - z**2, z**2)``, expanded in place so index 0 collects all
    "minus" transforms (least reliable) and index N-1 all "plus" ones.
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    z = np.array([epsilon], dtype=np.float64)
    for _ in range(n):
        nxt = np.empty(2 * z.size, dtype=np.float64)
        nxt[0::2] = 2.0 * z - z * z
        nxt[1::2] = z * z
        z = nxt
    return z


def construct_frozen_set(n, K, epsilon=0.5):
    """
    Build a ``PolarCode`` by freezing the ``N - K`` least reliable bit
    channels of a design BEC.

    Reliabilities come from :func:`bec_erasure_probs`; the indices with the
    largest erasure probability are frozen, ties broken by freezing the
    lower index first.

    Parameters
    ----------
    n : int
        Log2 of the code length.
    K : int
        Code dimension, ``0 < K <= 2**n``.
    epsilon : float
        Design erasure probability in (0, 1).
    """
    N = 1 << n
    if not 0 < K <= N:
        raise ValueError(f"K must satisfy 0 < K <= {N}, got {K}")
    z = bec_erasure_probs(n, epsilon)
    # Sort by decreasing z, then increasing index: the first N-K are frozen.
    order = np.lexsort((np.arange(N), -z))
    return PolarCode(n, order[: N - K])
