"""Exact-integer VAS model and path algebra.

All arithmetic uses Python ints (arbitrary precision).  Paths are stored as
sequences of generator indices, never as raw vectors, so a witness always
refers back to a concrete system instance.  The empty path is legal and has
effect zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import MalformedPathError

Vector = tuple[int, ...]


def zero_vector(dim: int) -> Vector:
    return (0,) * dim


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(k: int, a: Vector) -> Vector:
    return tuple(k * x for x in a)


def vec_le(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def vec_ge(a: Vector, b: Vector) -> bool:
    return all(x >= y for x, y in zip(a, b))


def inf_norm(a: Vector) -> int:
    return max((abs(x) for x in a), default=0)


def dot(a: Vector, b: Vector) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class VasSystem:
    """A d-dimensional vector addition system: an ordered tuple of generators.

    Generator order is part of the identity of the system; witness paths
    reference generators by index.
    """

    dim: int
    generators: tuple[Vector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.dim:
                raise ValueError(f"generator {g} does not have {self.dim} entries")

    @cached_property
    def norm(self) -> int:
        """The quantity d * sum over generators of the infinity norm."""
        return self.dim * sum(inf_norm(g) for g in self.generators)

    def check_path(self, path: Sequence[int]) -> None:
        n = len(self.generators)
        for i in path:
            if not 0 <= i < n:
                raise MalformedPathError(
                    f"path index {i} out of range for {n} generators"
                )

    def step(self, index: int) -> Vector:
        return self.generators[index]


def prefix_effects(vas: VasSystem, path: Sequence[int]) -> Iterator[Vector]:
    """Yield the effects of all prefixes of ``path``, starting with the empty one."""
    vas.check_path(path)
    acc = zero_vector(vas.dim)
    yield acc
    for i in path:
        acc = vec_add(acc, vas.generators[i])
        yield acc


def effect(vas: VasSystem, path: Sequence[int]) -> Vector:
    """Sum of the generators along ``path``; the empty path has effect zero."""
    vas.check_path(path)
    acc = [0] * vas.dim
    for i in path:
        g = vas.generators[i]
        for k in range(vas.dim):
            acc[k] += g[k]
    return tuple(acc)


def drop_peak(vas: VasSystem, path: Sequence[int]) -> tuple[Vector, Vector]:
    """Per-coordinate (drop, peak) over all prefixes of ``path``.

    drop_k is the absolute value of the minimum prefix effect in coordinate k
    (0 for the empty prefix), peak_k the maximum prefix effect.  Both are
    always nonnegative.
    """
    vas.check_path(path)
    lo = [0] * vas.dim
    hi = [0] * vas.dim
    acc = [0] * vas.dim
    for i in path:
        g = vas.generators[i]
        for k in range(vas.dim):
            acc[k] += g[k]
            if acc[k] < lo[k]:
                lo[k] = acc[k]
            elif acc[k] > hi[k]:
                hi[k] = acc[k]
    return tuple(-x for x in lo), tuple(hi)


def overshoot(vas: VasSystem, path: Sequence[int]) -> Vector:
    """Per coordinate, peak minus effect: by how much the path exceeds its target."""
    eff = effect(vas, path)
    _, peak = drop_peak(vas, path)
    return vec_sub(peak, eff)


def is_valid_n_trace(vas: VasSystem, path: Sequence[int], start: Vector) -> bool:
    """True iff every prefix effect added to ``start`` stays componentwise >= 0."""
    start = tuple(start)
    return all(
        all(s + e >= 0 for s, e in zip(start, p)) for p in prefix_effects(vas, path)
    )


def is_box_reaching_trace(vas: VasSystem, path: Sequence[int], target: Vector) -> bool:
    """True iff ``path`` runs from 0 to ``target`` staying inside [0, target].

    Every prefix effect must be componentwise between 0 and ``target``, and
    the total effect must equal ``target``.
    """
    target = tuple(target)
    if len(target) != vas.dim:
        raise ValueError("target dimension mismatch")
    last = None
    for p in prefix_effects(vas, path):
        if not all(0 <= e <= t for e, t in zip(p, target)):
            return False
        last = p
    return last == target


def check_target(target: Sequence[int], dim: int) -> Vector:
    """Validate a target vector: correct arity, nonnegative integer entries."""
    t = tuple(int(x) for x in target)
    if len(t) != dim:
        raise ValueError(f"target {t} does not have {dim} entries")
    if any(x < 0 for x in t):
        raise ValueError(f"target {t} has a negative entry")
    return t


@dataclass(frozen=True)
class PathRecord:
    """A path of generator indices with cached effect / drop / peak."""

    indices: tuple[int, ...]
    effect: Vector
    drop: Vector
    peak: Vector

    @classmethod
    def record(cls, vas: VasSystem, indices: Iterable[int]) -> "PathRecord":
        idx = tuple(indices)
        eff = effect(vas, idx)
        dr, pk = drop_peak(vas, idx)
        return cls(indices=idx, effect=eff, drop=dr, peak=pk)

    def __len__(self) -> int:
        return len(self.indices)
