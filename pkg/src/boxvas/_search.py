"""Grid reachability engines over boxes [0, cap].

Two interchangeable implementations are kept on purpose so that higher-level
deciders can be differentially tested against each other:

* ``bfs_grid``: a plain breadth-first search with parent pointers, used when
  a witness path is needed.  Frontier order is deterministic (FIFO, generators
  expanded in index order), so witnesses are reproducible.
* ``reachable_bitmap``: a fixpoint over the whole grid encoded as one big
  integer bitmap; a generator step is a single shift-and-mask.  Much faster
  for sweeps, but yields decisions only.
"""
from __future__ import annotations

from collections import deque
from math import prod
from typing import Sequence

from .core import Vector
from .errors import ResourceBudgetError

DEFAULT_NODE_BUDGET = 10_000_000


def grid_cells(cap: Sequence[int]) -> int:
    return prod(c + 1 for c in cap)


def _strides(cap: Sequence[int]) -> list[int]:
    d = len(cap)
    s = [1] * d
    for i in range(d - 2, -1, -1):
        s[i] = s[i + 1] * (cap[i + 1] + 1)
    return s


def _coord_range_mask(total_bits: int, stride: int, width: int, lo: int, hi: int) -> int:
    # Bitmap of all cells whose i-th coordinate lies in [lo, hi]; the i-th
    # coordinate occupies blocks of `stride` cells repeating with period
    # stride * width.
    period = stride * width
    block = ((1 << ((hi - lo + 1) * stride)) - 1) << (lo * stride)
    reps = total_bits // period
    return block * (((1 << (reps * period)) - 1) // ((1 << period) - 1))


def reachable_bitmap(
    generators: Sequence[Vector],
    cap: Sequence[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Bitmap (as int) of all points of [0, cap] reachable from 0 inside the box.

    Bit ``sum(x_i * stride_i)`` is set iff x is reachable by generator steps
    that never leave [0, cap].
    """
    cap = tuple(cap)
    n = grid_cells(cap)
    if n > node_budget:
        raise ResourceBudgetError(
            f"grid of {n} cells exceeds node budget {node_budget}", node_budget
        )
    strides = _strides(cap)
    moves: list[tuple[int, int]] = []
    for g in generators:
        mask = (1 << n) - 1
        ok = True
        for gi, ci, si in zip(g, cap, strides):
            lo = max(0, -gi)
            hi = min(ci, ci - gi)
            if lo > hi:
                ok = False
                break
            if (lo, hi) != (0, ci):
                mask &= _coord_range_mask(n, si, ci + 1, lo, hi)
        if ok:
            offset = sum(gi * si for gi, si in zip(g, strides))
            moves.append((offset, mask))
    reached = 1  # origin
    while True:
        new = reached
        for offset, mask in moves:
            src = reached & mask
            new |= (src << offset) if offset >= 0 else (src >> -offset)
        if new == reached:
            return reached
        reached = new


def bitmap_has(bitmap: int, cap: Sequence[int], point: Sequence[int]) -> bool:
    strides = _strides(tuple(cap))
    idx = sum(x * s for x, s in zip(point, strides))
    return bool((bitmap >> idx) & 1)


def bfs_grid(
    generators: Sequence[Vector],
    cap: Sequence[int],
    target: Sequence[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[int] | None:
    """BFS from 0 inside [0, cap]; returns a witness index path to ``target``.

    Returns None when the target is unreachable.  Deterministic: FIFO
    frontier, generators tried in index order, so the returned witness is a
    stable fixture for a given instance.
    """
    cap = tuple(cap)
    target = tuple(target)
    d = len(cap)
    start = (0,) * d
    if target == start:
        return []
    parent: dict[Vector, tuple[Vector, int]] = {}
    seen = {start}
    frontier = deque([start])
    while frontier:
        p = frontier.popleft()
        for gi, g in enumerate(generators):
            q = tuple(p[k] + g[k] for k in range(d))
            if q in seen:
                continue
            inside = True
            for k in range(d):
                if not 0 <= q[k] <= cap[k]:
                    inside = False
                    break
            if not inside:
                continue
            seen.add(q)
            parent[q] = (p, gi)
            if q == target:
                path: list[int] = []
                node = q
                while node != start:
                    node, gi2 = parent[node]
                    path.append(gi2)
                path.reverse()
                return path
            frontier.append(q)
            if len(seen) > node_budget:
                raise ResourceBudgetError(
                    f"BFS exceeded node budget {node_budget}", node_budget
                )
    return None
