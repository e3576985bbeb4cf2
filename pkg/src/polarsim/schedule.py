"""Per-clock operation schedule of a line successive-cancellation decoder.

One stage activation per clock; a stage-j activation computes all 2**j
edges of one block in parallel. The canonical depth-first order comes out
to 2N - 2 activations, with every leaf value produced exactly once and in
index order.
"""

from dataclasses import dataclass, field
from typing import List, NamedTuple

import numpy as np


class PeAssignment(NamedTuple):
    """One processing element's job inside a G activation."""

    pe: int
    edge: int
    read_position: int


@dataclass(frozen=True)
class StageOp:
    clock: int
    stage: int
    kind: str  # "F" or "G"
    edges: np.ndarray  # ascending edge indices, length 2**stage
    pe_assignments: List[PeAssignment] = field(default_factory=list)

    @property
    def block(self):
        return int(self.edges[0]) >> self.stage


@dataclass(frozen=True)
class DecodeSchedule:
    code: object
    ops: List[StageOp]

    @property
    def total_clocks(self):
        return len(self.ops)


def _g_assignments(stage, edges):
    # PE p serves the edge with in-block offset 2**stage - 1 - p; under the
    # shift rule the sum that edge needs is then always sitting in register
    # p, so the read position equals the PE index.
    width = 1 << stage
    return [
        PeAssignment(pe=width - 1 - r, edge=int(e), read_position=width - 1 - r)
        for r, e in enumerate(edges)
    ]


def build_line_schedule(code):
    """
    Depth-first line schedule for ``code``: before each leaf decision the
    stage chain from the highest invalidated stage down to stage 0 is
    (re)computed; even-branch activations are F, odd-branch ones are G
    with one PSU read per edge.
    """
    ops = []

    def descend(level, block):
        # Decode the leaves under stage-`level` block `block`, whose input
        # values are already available.
        if level == 0:
            return
        stage = level - 1
        width = 1 << stage
        for half, kind in ((2 * block, "F"), (2 * block + 1, "G")):
            edges = np.arange(half * width, (half + 1) * width, dtype=np.int64)
            assignments = _g_assignments(stage, edges) if kind == "G" else []
            ops.append(
                StageOp(
                    clock=len(ops),
                    stage=stage,
                    kind=kind,
                    edges=edges,
                    pe_assignments=assignments,
                )
            )
            descend(stage, half)

    descend(code.n, 0)
    return DecodeSchedule(code=code, ops=ops)
