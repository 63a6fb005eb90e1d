"""Rearranging a vector multiset so partial sums hug the straight line.

``steinitz_reorder`` produces a permutation whose prefix sums stay within
d*I (I = largest input infinity-norm) of the line from 0 to the total,
checked in exact integer arithmetic before returning.  The construction is
the classical chain-of-polytopes argument: walk the index set down one
element at a time, at each level purifying a feasible fractional point to a
vertex of

    { lam in [0,1]^A : sum lam = |A| - 1 - d,  sum lam_i v_i is the
      matching point on the line }

A vertex of that polytope always has a zero coordinate (it has at most d+1
fractional entries, and a counting argument rules out the all-ones/fraction
split), and dropping that index keeps the next level feasible.

``reorder_counts`` is the cheap large-multiset variant used when the input
is many copies of few distinct vectors: a largest-deficit proportional
schedule whose per-type deviation from the ideal line is under one copy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import VasSystem, Vector, drop_peak, effect, inf_norm
from .errors import InternalCheckError, PreconditionError

EXACT_REORDER_CUTOFF = 48


@dataclass(frozen=True)
class SteinitzResult:
    permutation: tuple[int, ...]
    corridor_bound: int  # d * I
    verified: bool


def _kernel_vector(
    rows: list[list[Fraction]], cols: int
) -> list[Fraction] | None:
    """A nonzero vector in the nullspace of the given row system, or None."""
    if cols == 0:
        return None
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return None
    fc = free[0]
    vec = [Fraction(0)] * cols
    vec[fc] = Fraction(1)
    for i, pc in enumerate(pivots):
        vec[pc] = -mat[i][fc]
    return vec


def _purify(
    mu: dict[int, Fraction], vectors: Sequence[Vector], d: int
) -> dict[int, Fraction]:
    """Move a feasible point to a vertex by walking nullspace directions of
    the active system until a box bound is hit; frozen coordinates stay put."""
    mu = dict(mu)
    while True:
        free = [i for i in mu if 0 < mu[i] < 1]
        rows = [[Fraction(1)] * len(free)]
        for c in range(d):
            rows.append([Fraction(vectors[i][c]) for i in free])
        nu = _kernel_vector(rows, len(free))
        if nu is None:
            return mu
        theta = None
        for x, i in zip(nu, free):
            if x > 0:
                cand = (1 - mu[i]) / x
            elif x < 0:
                cand = mu[i] / -x
            else:
                continue
            if theta is None or cand < theta:
                theta = cand
        assert theta is not None and theta > 0
        for x, i in zip(nu, free):
            mu[i] += theta * x


def steinitz_reorder(vectors: Sequence[Sequence[int]]) -> SteinitzResult:
    """Permutation keeping every prefix sum within d*I of the straight line.

    The bound is re-verified exactly before returning; a verification
    failure would contradict the construction and raises an internal error.
    """
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if not vecs:
        raise PreconditionError("steinitz_reorder requires a nonempty input")
    d = len(vecs[0])
    if any(len(v) != d for v in vecs):
        raise PreconditionError("all vectors must have the same arity")
    k = len(vecs)
    total = tuple(sum(v[c] for v in vecs) for c in range(d))
    bound = d * max(inf_norm(v) for v in vecs)

    if k <= d:
        perm = tuple(range(k))
        return SteinitzResult(perm, bound, _verify_corridor(vecs, perm, bound))

    active = set(range(k))
    lam = {i: Fraction(k - d, k) for i in active}
    removed: list[int] = []
    for t in range(k, d, -1):
        # scale the level-t point down to the level-(t-1) polytope over the
        # same ground set, then purify; a vertex there must have a zero
        ell = t - 1 - d
        rho = Fraction(ell, t - d)
        mu = {i: lam[i] * rho for i in active}
        mu = _purify(mu, vecs, d)
        zeros = sorted(i for i in active if mu[i] == 0)
        if not zeros:
            raise InternalCheckError("no zero coordinate at a polytope vertex")
        z = zeros[0]
        active.remove(z)
        removed.append(z)
        del mu[z]
        lam = mu
    perm = tuple(sorted(active)) + tuple(reversed(removed))
    if not _verify_corridor(vecs, perm, bound):
        raise InternalCheckError("reordered prefix sums left the corridor")
    return SteinitzResult(perm, bound, True)


def _verify_corridor(
    vecs: list[Vector], perm: tuple[int, ...], bound: int
) -> bool:
    """Exact corridor check: |k * prefix_n - (n - d) * total| <= k * bound
    componentwise for every n in [d, k] (all-integer, no rounding)."""
    k = len(vecs)
    d = len(vecs[0])
    total = tuple(sum(v[c] for v in vecs) for c in range(d))
    prefix = [0] * d
    for n, idx in enumerate(perm, start=1):
        for c in range(d):
            prefix[c] += vecs[idx][c]
        if n < d:
            continue
        for c in range(d):
            if abs(k * prefix[c] - (n - d) * total[c]) > k * bound:
                return False
    return True


def check_steinitz_drop_peak(vas: VasSystem, path: Sequence[int]) -> bool:
    """Check the drop/peak bounds a reordered path must satisfy: drops at
    most 2*norm and peaks at most effect + 2*norm, per coordinate."""
    eff = effect(vas, path)
    if any(e < 0 for e in eff):
        raise PreconditionError(
            "drop/peak bounds apply to paths with nonnegative effect"
        )
    drops, peaks = drop_peak(vas, path)
    limit = 2 * vas.norm
    return all(dr <= limit for dr in drops) and all(
        pk <= e + limit for pk, e in zip(peaks, eff)
    )


def reorder_counts(vas: VasSystem, counts: Sequence[int]) -> list[int]:
    """Order a multiset given as per-generator counts so prefix sums track
    the proportional line.

    Small multisets go through the exact construction; large ones use a
    largest-deficit schedule, which keeps each type within one copy of its
    ideal share (so prefix deviation stays under the sum of distinct
    generator norms).
    """
    counts = [int(c) for c in counts]
    if len(counts) != len(vas.generators):
        raise PreconditionError("one count per generator is required")
    if any(c < 0 for c in counts):
        raise PreconditionError("counts must be nonnegative")
    k = sum(counts)
    if k == 0:
        return []
    if k <= EXACT_REORDER_CUTOFF:
        expanded: list[int] = []
        for i, c in enumerate(counts):
            expanded.extend([i] * c)
        result = steinitz_reorder([vas.generators[i] for i in expanded])
        return [expanded[p] for p in result.permutation]

    placed = [0] * len(counts)
    order: list[int] = []
    live = [i for i, c in enumerate(counts) if c > 0]
    for n in range(1, k + 1):
        # deficit of type i scaled by k: n*count_i - placed_i*k
        best = None
        best_key = None
        for i in live:
            if placed[i] >= counts[i]:
                continue
            key = n * counts[i] - placed[i] * k
            if best_key is None or key > best_key:
                best_key = key
                best = i
        assert best is not None
        placed[best] += 1
        order.append(best)
    return order
