"""Cycle-accurate partial-sums unit models.

Three interchangeable architectures sit behind a common push-bit /
read-sum contract:

* :class:`ShiftRegisterPsu` -- a width-W shift register whose input bit is
  gated per cell by a control row, plus the LFSR that generates those rows.
* :class:`IndicatorPsu` -- N-1 single-bit cells, one per live partial sum,
  with per-push accumulate/reset control.
* :class:`OraclePsu` -- keeps the whole decision prefix and recomputes any
  sum from its closed form; the ground truth the others are checked against.

All models carry an optional leading ``frames`` axis so that many
independent instances can be stepped in lockstep.

The feedback-style architecture is modeled by complexity formulas only
(:func:`fb_psu_complexity`); no behavioral description exists to simulate.
"""

from dataclasses import dataclass

import numpy as np

from .codes import kronecker_power


class PsuStateError(RuntimeError):
    """A push or read that the hardware could not have performed."""


def _is_pow2(x):
    return x >= 1 and (x & (x - 1)) == 0


class MatrixGenerator:
    """
    LFSR producing successive rows of the control matrix.

    The state starts at ``[1, 0, ..., 0]`` (row 0 of the width-W Kronecker
    power) and each step applies ``M[0] <= 1``, ``M[k] <= M[k] ^ M[k-1]``
    simultaneously. For W a power of two the sequence runs through all W
    rows and wraps back to row 0.
    """

    def __init__(self, width):
        if not _is_pow2(width):
            raise ValueError(f"generator width must be a power of two, got {width}")
        self.width = width
        self._m = np.zeros(width, dtype=np.uint8)
        self._m[0] = 1
        self.row_index = 0

    @property
    def row(self):
        """Current control row (do not mutate)."""
        return self._m

    def step(self):
        m = self._m
        nxt = np.empty_like(m)
        nxt[0] = 1
        nxt[1:] = m[1:] ^ m[:-1]
        self._m = nxt
        self.row_index += 1
        return self


class ShiftRegisterPsu:
    """
    Partial sums kept in a W-bit shift register with per-cell gated input.

    On each pushed decision bit u the registers update simultaneously::

        R[0] <= u AND c[0]
        R[k] <= R[k-1] XOR (u AND c[k])    k > 0

    where ``c`` is the current control row; the row generator then
    advances. With W = N/2 and the schedule's reversed PE mapping, the sum
    needed by PE p always sits in R[p], so ``read`` is a plain register
    tap. The decoder instance amounts to W registers, W XOR and W AND
    gates plus the generator.

    Parameters
    ----------
    width : int
        Register width W (N/2 when decoding, N when used as the encoder).
    frames : int
        Number of independent instances stepped in lockstep.
    max_steps : int, optional
        Push budget; defaults to 2*W (a full decode). The encoder uses W.
    """

    def __init__(self, width, frames=1, max_steps=None):
        self.width = width
        self.frames = frames
        self.max_steps = 2 * width if max_steps is None else max_steps
        self.registers = np.zeros((frames, width), dtype=np.uint8)
        self.generator = MatrixGenerator(width)
        self.step_count = 0

    # Structural tallies of the decoder instance.
    @property
    def register_count(self):
        return self.width

    @property
    def xor_count(self):
        return self.width

    @property
    def and_count(self):
        return self.width

    def push(self, u):
        """Shift one decision bit (scalar or per-frame array) in."""
        if self.step_count >= self.max_steps:
            raise PsuStateError(
                f"push #{self.step_count + 1} exceeds the {self.max_steps}-step budget"
            )
        u = np.broadcast_to(np.asarray(u, dtype=np.uint8), (self.frames,))
        row = self.generator.row
        reg = self.registers
        gated = u[:, None] & row
        reg[:, 1:] = reg[:, :-1] ^ gated[:, 1:]
        reg[:, 0] = gated[:, 0]
        self.generator.step()
        self.step_count += 1
        return self

    def read(self, i, j, position):
        """Tap register ``position``; (i, j) identify the sum for the contract."""
        if not 0 <= position < self.width:
            raise ValueError(f"register index {position} out of range")
        return self.registers[:, position].copy()


class IndicatorPsu:
    """
    N-1 single-bit cells, one per live partial sum.

    Cell ``(j, r)`` lives at flat offset ``2**j - 1 + r`` and holds the
    stage-j sum with in-block offset r for the block currently being
    accumulated. When a push opens a new stage-j block (leaf index
    divisible by 2**j) the stage's cells reset; the push then accumulates
    into every cell whose offset r is a submask of the leaf's in-block
    position. Reads are only valid while the requested block is complete
    and not yet recycled.
    """

    def __init__(self, N, frames=1):
        if not _is_pow2(N) or N < 2:
            raise ValueError(f"N must be a power of two >= 2, got {N}")
        self.N = N
        self.n = N.bit_length() - 1
        self.frames = frames
        self.cells = np.zeros((frames, N - 1), dtype=np.uint8)
        self.step_count = 0

    def push(self, u):
        t = self.step_count
        if t >= self.N:
            raise PsuStateError(f"push #{t + 1} exceeds the code length {self.N}")
        u = np.broadcast_to(np.asarray(u, dtype=np.uint8), (self.frames,))
        for j in range(self.n):
            base = (1 << j) - 1
            m = t & ((1 << j) - 1)
            if m == 0:
                self.cells[:, base : base + (1 << j)] = 0
            # Accumulate into every cell whose offset is a submask of m.
            sub = m
            while True:
                self.cells[:, base + sub] ^= u
                if sub == 0:
                    break
                sub = (sub - 1) & m
        self.step_count += 1
        return self

    def read(self, i, j, position=None):
        if not (0 <= j < self.n and 0 <= i < self.N):
            raise ValueError(f"no stage-{j} sum for edge {i}")
        b = i >> j
        if self.step_count != (b + 1) << j:
            raise PsuStateError(
                f"sum ({i},{j}) not live after {self.step_count} pushes"
            )
        return self.cells[:, ((1 << j) - 1) + (i & ((1 << j) - 1))].copy()


class OraclePsu:
    """
    Brute-force reference: remembers every pushed bit and recomputes each
    requested sum from the decision prefix via the closed form.
    """

    def __init__(self, N, frames=1):
        self.N = N
        self.n = N.bit_length() - 1
        self.frames = frames
        self.bits = np.zeros((frames, N), dtype=np.uint8)
        self.step_count = 0

    def push(self, u):
        if self.step_count >= self.N:
            raise PsuStateError(f"push #{self.step_count + 1} exceeds {self.N}")
        self.bits[:, self.step_count] = np.asarray(u, dtype=np.uint8)
        self.step_count += 1
        return self

    def read(self, i, j, position=None):
        b = i >> j
        if self.step_count < (b + 1) << j:
            raise PsuStateError(f"block of sum ({i},{j}) incomplete")
        block = self.bits[:, b << j : (b + 1) << j]
        r = i & ((1 << j) - 1)
        mm = np.arange(1 << j)
        return np.bitwise_xor.reduce(block[:, (~mm & r) == 0], axis=1)


def oracle_partial_sum(u_hat_prefix, i, j):
    """
    Exact partial sum of stage j at edge i from a decision prefix.

    For ``i = b*2**j + r`` this is element r of the block's product with
    the order-j Kronecker power. Raises if the prefix does not cover the
    whole block.
    """
    u = np.asarray(u_hat_prefix, dtype=np.uint8)
    b, r = i >> j, i & ((1 << j) - 1)
    lo, hi = b << j, (b + 1) << j
    if u.shape[-1] < hi:
        raise ValueError(f"sum ({i},{j}) needs decisions up to {hi - 1}")
    col = kronecker_power(j)[:, r].astype(np.uint32)
    return np.asarray((u[..., lo:hi].astype(np.uint32) @ col) & 1, dtype=np.uint8)


def block_partial_sums(u_block):
    """
    All stage-j sums of one aligned block at once (j = log2 of block size),
    computed by the butterfly transform along the last axis.
    """
    x = np.asarray(u_block, dtype=np.uint8).copy()
    size = x.shape[-1]
    level = 1
    while level < size:
        span = level << 1
        blocks = x.reshape(x.shape[:-1] + (size // span, span))
        blocks[..., :level] ^= blocks[..., level:]
        level = span
    return x


def make_psu(arch, code, frames=1):
    """Instantiate the decoding PSU named by ``arch`` for ``code``."""
    if arch == "sr":
        return ShiftRegisterPsu(code.N // 2, frames=frames)
    if arch == "if":
        return IndicatorPsu(code.N, frames=frames)
    if arch == "oracle":
        return OraclePsu(code.N, frames=frames)
    raise ValueError(f"unknown PSU architecture {arch!r}")


@dataclass(frozen=True)
class FbPsuComplexity:
    """Storage and logic tallies of the feedback-style PSU."""

    N: int
    dff_count: int
    xor_count: int
    mux_count: int
    critical_xor_depth: int
    critical_mux_depth: int


def fb_stage_dff_counts(N):
    """Per-stage register counts D_l, l = 2..log2(N), of the feedback PSU."""
    if not _is_pow2(N) or N < 4:
        raise ValueError(f"N must be a power of two >= 4, got {N}")
    n = N.bit_length() - 1
    return [
        N // (1 << (n - l + 1)) + (N // (1 << (n - l + 2))) * ((1 << (l - 2)) - 2)
        for l in range(2, n + 1)
    ]


def fb_psu_complexity(N):
    """
    Feedback-PSU complexity: the D_l stage sum must equal the closed form
    (N**2 - 4)/12 registers; logic is N/2 - 1 XORs and N - 2 muxes with
    critical depths log2(N)-1 and log2(N)-2.
    """
    stages = fb_stage_dff_counts(N)
    n = N.bit_length() - 1
    closed = (N * N - 4) // 12
    if sum(stages) != closed:
        raise AssertionError(
            f"stage sum {sum(stages)} != closed form {closed} at N={N}"
        )
    return FbPsuComplexity(
        N=N,
        dff_count=closed,
        xor_count=N // 2 - 1,
        mux_count=N - 2,
        critical_xor_depth=n - 1,
        critical_mux_depth=n - 2,
    )
