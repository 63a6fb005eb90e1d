"""Reduction of box-reachability to plain reachability by doubling dimension.

A d-dimensional generator g becomes (g, -g) in 2d dimensions, and one pump
generator e_{d+i} is added per mirror coordinate.  Writing a configuration
as (x, y) and P for the pump counts, y = P - x holds throughout, so y >= 0
forces x <= P <= t on every prefix of a run to (t, 0).  Hence t is
box-reachable in the original system iff (t, 0) is reachable in the lifted
one, and every successful lifted run stays within the box [0, (t, t)], so
the capped engine decides it exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._search import DEFAULT_NODE_BUDGET, bfs_grid, bitmap_has, reachable_bitmap
from .core import VasSystem, Vector, check_target, is_box_reaching_trace
from .errors import InternalCheckError


@dataclass(frozen=True)
class LiftedVas:
    """A 2d-dimensional system encoding box-reachability of a d-dimensional one.

    The first len(original.generators) lifted generators are the mirrored
    originals, in order; the remaining d are the pump generators.
    """

    original: VasSystem
    system: VasSystem

    @property
    def mirror_indices(self) -> range:
        return range(len(self.original.generators))

    @property
    def unit_indices(self) -> range:
        n = len(self.original.generators)
        return range(n, n + self.original.dim)


def lift_vas(vas: VasSystem) -> LiftedVas:
    d = vas.dim
    mirrored = [g + tuple(-x for x in g) for g in vas.generators]
    pumps = [
        tuple(1 if k == d + i else 0 for k in range(2 * d)) for i in range(d)
    ]
    lifted = VasSystem(2 * d, tuple(mirrored + pumps))
    return LiftedVas(original=vas, system=lifted)


def lifted_target(vas: VasSystem, target: Sequence[int]) -> Vector:
    t = check_target(target, vas.dim)
    return t + (0,) * vas.dim


def decide_box_via_lift(
    vas: VasSystem,
    target: Sequence[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> bool:
    """Box-reachability decided through the lifted system.

    Independent of the direct grid deciders, so the two can differentially
    test each other.
    """
    t = check_target(target, vas.dim)
    lift = lift_vas(vas)
    cap = t + t
    bitmap = reachable_bitmap(lift.system.generators, cap, node_budget)
    return bitmap_has(bitmap, cap, lifted_target(vas, t))


def project_witness(lift: LiftedVas, path: Sequence[int]) -> list[int]:
    """Drop the pump steps of a lifted witness, keeping mirrored indices."""
    n = len(lift.original.generators)
    return [i for i in path if i < n]


def box_witness_via_lift(
    vas: VasSystem,
    target: Sequence[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[int] | None:
    """A box-reaching witness for the original system obtained by searching
    the lifted one and projecting out the pump steps; re-verified."""
    t = check_target(target, vas.dim)
    lift = lift_vas(vas)
    cap = t + t
    path = bfs_grid(lift.system.generators, cap, lifted_target(vas, t), node_budget)
    if path is None:
        return None
    projected = project_witness(lift, path)
    if not is_box_reaching_trace(vas, projected, t):
        raise InternalCheckError("projected lifted witness is not box-reaching")
    return projected
