"""Three equivalent polar encoders: matrix product, stage graph, shift register.

All encoders accept a single length-N bit vector or a batch with one frame
per row; the output has the same shape as the input.
"""

import numpy as np

from .codes import kronecker_power
from .psu import ShiftRegisterPsu


def _as_bits(u, N):
    u = np.asarray(u, dtype=np.uint8)
    if u.shape[-1] != N:
        raise ValueError(f"expected vectors of length {N}, got {u.shape[-1]}")
    return u


def expand(code, d):
    """
    Place the K information bits ``d`` on the non-frozen positions of a
    length-N vector, zeros everywhere else.
    """
    d = np.asarray(d, dtype=np.uint8)
    if d.shape[-1] != code.K:
        raise ValueError(f"expected {code.K} information bits, got {d.shape[-1]}")
    u = np.zeros(d.shape[:-1] + (code.N,), dtype=np.uint8)
    u[..., code.info_indices] = d
    return u


def encode_matrix(code, u):
    """
    Encode by direct GF(2) product with the dense N x N transform matrix.

    Only usable while N is within the dense-matrix cap.
    """
    u = _as_bits(u, code.N)
    g = kronecker_power(code.n)
    return (u.astype(np.uint32) @ g.astype(np.uint32) & 1).astype(np.uint8)


def encode_graph(code, u):
    """
    Encode by propagating ``u`` through the n butterfly stages of the
    encoder graph (N/2 XORs per stage). Works for any N.
    """
    u = _as_bits(u, code.N)
    x = u.copy()
    for level in range(code.n):
        span = 1 << (level + 1)
        half = span >> 1
        blocks = x.reshape(x.shape[:-1] + (code.N // span, span))
        blocks[..., :half] ^= blocks[..., half:]
    return x


def sequential_encode(code, u):
    """
    Encode by shifting ``u`` bit by bit into a width-N partial-sums
    register driven by the control-row generator, one bit per clock: the
    decoder's sum-tracking hardware doubles as the encoder.

    After N clocks the register holds the codeword back to front: the
    returned vector is the register read out reversed.
    """
    u = _as_bits(u, code.N)
    N = code.N
    frames = int(np.prod(u.shape[:-1], dtype=np.int64)) if u.ndim > 1 else 1
    flat = u.reshape(frames, N)

    unit = ShiftRegisterPsu(N, frames=frames, max_steps=N)
    for step in range(N):
        unit.push(flat[:, step])
    return unit.registers[:, ::-1].reshape(u.shape).copy()
