"""2D cone machinery: classification, facets, lattice and integer-cone membership.

Everything here is exact integer / rational arithmetic.  The cone of a
2-dimensional system is classified by sorting generator directions by angle
and looking at the largest cyclic gap: a gap over 180 degrees leaves a
pointed cone, exactly 180 a half-plane, anything less the full plane.
"""
from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from math import gcd
from typing import Sequence

from .core import (
    PathRecord,
    VasSystem,
    Vector,
    dot,
    inf_norm,
    is_box_reaching_trace,
    vec_scale,
    vec_sub,
)
from .errors import (
    DegenerateSystemError,
    InternalCheckError,
    PreconditionError,
    UnsupportedDimensionError,
)

DEFAULT_INT_CONE_BUDGET = 1_000_000


class ConeKind(Enum):
    ZERO_ONLY = "zero-only"
    RAY = "ray"
    LINE = "line"
    PROPER_CONE = "proper-cone"
    HALF_PLANE = "half-plane"
    FULL_PLANE = "full-plane"


class QuadrantRelation(Enum):
    CONTAINS_QUADRANT = "contains-quadrant"
    CONTAINED_IN_QUADRANT = "contained-in-quadrant"
    INTERSECTS_VIA_X_AXIS_SIDE = "intersects-via-x-axis-side"
    INTERSECTS_VIA_Y_AXIS_SIDE = "intersects-via-y-axis-side"
    OTHER = "other"


class Membership(Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class DeepConstant:
    """Depth threshold used by the deep-point shortcut; provenance is recorded
    so reports can tell a configured value from the built-in heuristic."""

    value: int
    provenance: str = "configured"  # or "default"

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("deep constant must be nonnegative")


def default_deep_constant(vas: VasSystem) -> DeepConstant:
    # 16 * norm^3: heuristic default, validated per instance by
    # ditc_falsification_scan before it is trusted in threshold computations.
    return DeepConstant(16 * vas.norm**3, provenance="default")


def _deep_value(m: "DeepConstant | int") -> int:
    return m.value if isinstance(m, DeepConstant) else int(m)


@dataclass(frozen=True)
class ConeData:
    """Classification of the cone spanned by a 2-VAS's generators.

    For PROPER_CONE, chi1 is the counterclockwise-most boundary direction and
    chi2 the clockwise-most; facets = (f1, f2) are their paired inward
    normals, with <f_i, chi_i> = 0.  For HALF_PLANE, chi1/chi2 are the two
    (opposite) boundary directions and a single facet normal is stored.  For
    RAY/LINE both line normals are kept so membership checks stay uniform.
    """

    kind: ConeKind
    chi1: Vector | None
    chi2: Vector | None
    facets: tuple[Vector, ...]
    quadrant_relation: QuadrantRelation
    norm: int


@dataclass(frozen=True)
class IntConeResult:
    status: Membership
    coefficients: tuple[int, ...] | None = None

    @property
    def is_member(self) -> bool:
        return self.status is Membership.MEMBER


@dataclass(frozen=True)
class DitcScanReport:
    counterexamples: tuple[Vector, ...]
    undecided: tuple[Vector, ...]
    deep_lattice_points: int
    radius: int
    m_value: int


@dataclass(frozen=True)
class SeedVector:
    """A strictly positive box-reachable vector s and its scaled copy s_pos.

    ``witness`` box-reaches s; repeating its indices ``repeat`` times
    box-reaches s_pos = repeat * s.
    """

    s: Vector
    s_pos: Vector
    witness: PathRecord
    repeat: int

    def pos_witness_indices(self) -> tuple[int, ...]:
        return self.witness.indices * self.repeat


def cross(a: Vector, b: Vector) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _primitive(v: Vector) -> Vector:
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _angle_half(v: Vector) -> int:
    # 0 for angles in [0, 180), 1 for [180, 360)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(a: Vector, b: Vector) -> int:
    ha, hb = _angle_half(a), _angle_half(b)
    if ha != hb:
        return ha - hb
    c = cross(a, b)
    return 0 if c == 0 else (-1 if c > 0 else 1)


def _require_dim2(vas: VasSystem) -> None:
    if vas.dim != 2:
        raise UnsupportedDimensionError(
            f"operation requires dimension 2, got {vas.dim}"
        )


def _lower_facet(chi: Vector) -> Vector:
    # inward normal of the clockwise-most boundary vector (cone lies ccw of it)
    return (-chi[1], chi[0])


def _upper_facet(chi: Vector) -> Vector:
    # inward normal of the counterclockwise-most boundary vector
    return (chi[1], -chi[0])


def _quadrant_relation(
    kind: ConeKind,
    chi1: Vector | None,
    chi2: Vector | None,
    facets: tuple[Vector, ...],
    nonzero: Sequence[Vector],
) -> QuadrantRelation:
    if all(g[0] >= 0 and g[1] >= 0 for g in nonzero):
        return QuadrantRelation.CONTAINED_IN_QUADRANT
    if kind in (ConeKind.PROPER_CONE, ConeKind.HALF_PLANE, ConeKind.FULL_PLANE):
        if all(f[0] >= 0 for f in facets) and all(f[1] >= 0 for f in facets):
            # both unit axes satisfy every facet, so the quadrant is inside
            return QuadrantRelation.CONTAINS_QUADRANT
    if kind is ConeKind.PROPER_CONE:
        assert chi1 is not None and chi2 is not None
        if chi2[0] > 0 and chi2[1] > 0 and chi1[0] <= 0:
            return QuadrantRelation.INTERSECTS_VIA_Y_AXIS_SIDE
        if chi1[0] > 0 and chi1[1] > 0 and chi2[1] <= 0:
            return QuadrantRelation.INTERSECTS_VIA_X_AXIS_SIDE
    return QuadrantRelation.OTHER


def cone_from_generators(vas: VasSystem) -> ConeData:
    """Classify the cone of a 2-VAS and compute its extremals and facets."""
    _require_dim2(vas)
    nonzero = [g for g in vas.generators if g != (0, 0)]

    def build(kind, chi1, chi2, facets):
        rel = _quadrant_relation(kind, chi1, chi2, facets, nonzero)
        return ConeData(
            kind=kind,
            chi1=chi1,
            chi2=chi2,
            facets=facets,
            quadrant_relation=rel,
            norm=vas.norm,
        )

    if not nonzero:
        return build(ConeKind.ZERO_ONLY, None, None, ((1, 0), (-1, 0)))

    dirs = sorted({_primitive(g) for g in nonzero}, key=cmp_to_key(_angle_cmp))
    if len(dirs) == 1:
        d = dirs[0]
        return build(ConeKind.RAY, d, d, (_lower_facet(d), _upper_facet(d)))
    if len(dirs) == 2 and dirs[0] == vec_scale(-1, dirs[1]):
        d = dirs[0]
        return build(
            ConeKind.LINE, d, vec_scale(-1, d), (_lower_facet(d), _upper_facet(d))
        )

    # Walk the cyclic gaps between angularly consecutive directions; at most
    # one gap can reach 180 degrees.  A gap from u counterclockwise to w is
    # over 180 iff cross(u, w) < 0, exactly 180 iff cross = 0 with opposite
    # orientation (duplicates were removed, so cross = 0 means w = -u).
    n = len(dirs)
    for i in range(n):
        u, w = dirs[i], dirs[(i + 1) % n]
        c = cross(u, w)
        if c < 0:
            # gap over 180: pointed cone from w (clockwise-most) ccw to u
            return build(
                ConeKind.PROPER_CONE, u, w, (_upper_facet(u), _lower_facet(w))
            )
        if c == 0 and dot(u, w) < 0:
            # gap exactly 180: half-plane whose boundary is the u/w line
            return build(ConeKind.HALF_PLANE, u, w, (_lower_facet(w),))
    return build(ConeKind.FULL_PLANE, None, None, ())


class _LatticeSolver:
    """Integer row echelon of the generator matrix with a transform, so that
    lattice membership plus reproducing coefficients is one back-substitution."""

    def __init__(self, generators: Sequence[Vector]):
        self.generators = [tuple(g) for g in generators]
        n = len(self.generators)
        rows = [list(g) for g in self.generators]
        transform = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        r = 0
        pivots: list[tuple[int, int]] = []  # (row, col)
        for col in range(2):
            if r >= n:
                break
            while True:
                live = [i for i in range(r, n) if rows[i][col] != 0]
                if not live:
                    break
                p = min(live, key=lambda i: abs(rows[i][col]))
                rows[r], rows[p] = rows[p], rows[r]
                transform[r], transform[p] = transform[p], transform[r]
                reduced = True
                for i in range(r + 1, n):
                    if rows[i][col] == 0:
                        continue
                    q = rows[i][col] // rows[r][col]
                    for k in range(2):
                        rows[i][k] -= q * rows[r][k]
                    for k in range(n):
                        transform[i][k] -= q * transform[r][k]
                    if rows[i][col] != 0:
                        reduced = False
                if reduced:
                    break
            if r < n and rows[r][col] != 0:
                if rows[r][col] < 0:
                    rows[r] = [-x for x in rows[r]]
                    transform[r] = [-x for x in transform[r]]
                pivots.append((r, col))
                r += 1
        self._rows = rows
        self._transform = transform
        self._pivots = pivots

    def solve(self, v: Vector) -> tuple[int, ...] | None:
        """Integer coefficients over the original generators summing to v,
        or None when v is not in the lattice."""
        n = len(self.generators)
        y = list(v)
        combo = [0] * n
        used = set()
        for r, col in self._pivots:
            used.add(col)
            q, rem = divmod(y[col], self._rows[r][col])
            if rem != 0:
                return None
            for k in range(2):
                y[k] -= q * self._rows[r][k]
            for k in range(n):
                combo[k] += q * self._transform[r][k]
        if y != [0, 0]:
            return None
        return tuple(combo)


def lattice_member(
    vas: VasSystem, v: Sequence[int]
) -> tuple[bool, tuple[int, ...] | None]:
    """Exact test for v being an integer combination of the generators."""
    _require_dim2(vas)
    coeffs = _LatticeSolver(vas.generators).solve(tuple(int(x) for x in v))
    return (coeffs is not None), coeffs


def is_m_deep(cone: ConeData, v: Sequence[int], m: "DeepConstant | int") -> bool:
    """True iff every facet dot product with v is at least m (vacuous when
    there are no facets, i.e. the full plane)."""
    mv = _deep_value(m)
    v = tuple(v)
    return all(dot(f, v) >= mv for f in cone.facets)


# ---------------------------------------------------------------------------
# integer-cone membership


def _line_multiple(b: Vector, v: Vector) -> int | None:
    """v as an integer multiple of the primitive direction b, if it is one."""
    if b[0] != 0:
        q, rem = divmod(v[0], b[0])
    else:
        q, rem = divmod(v[1], b[1])
    if rem != 0 or vec_scale(q, b) != v:
        return None
    return q


def _semigroup_rep(m: int, coins: Sequence[int]) -> list[int] | None:
    """Nonnegative counts of positive ``coins`` summing to m, or None.

    Shortest-path table of minimal reachable value per residue class modulo
    the smallest coin; handles arbitrarily large m in one pass.
    """
    if m == 0:
        return [0] * len(coins)
    if m < 0 or not coins:
        return None
    a0 = min(coins)
    i0 = coins.index(a0)
    dist: dict[int, int] = {0: 0}
    pred: dict[int, tuple[int, int]] = {}
    heap = [(0, 0)]
    while heap:
        val, r = heapq.heappop(heap)
        if val != dist.get(r):
            continue
        for ci, c in enumerate(coins):
            nv = val + c
            nr = nv % a0
            if nv < dist.get(nr, nv + 1):
                dist[nr] = nv
                pred[nr] = (r, ci)
                heapq.heappush(heap, (nv, nr))
    r = m % a0
    if r not in dist or dist[r] > m:
        return None
    counts = [0] * len(coins)
    cur = r
    while cur != 0 or dist[cur] != 0:
        prev, ci = pred[cur]
        counts[ci] += 1
        cur = prev
    counts[i0] += (m - dist[r]) // a0
    return counts


def _signed_line_rep(m: int, multiples: Sequence[int]) -> list[int] | None:
    """Nonnegative counts over signed nonzero ``multiples`` summing to m.

    When both signs are present the reachable set is the full group of
    multiples of the overall gcd: a Bezout combination is reduced modulo the
    first negative multiple, and the leftover (a multiple of that negative
    entry) is settled by a two-coin solve with shifted-nonnegative counts.
    """
    if m == 0:
        return [0] * len(multiples)
    g = 0
    for a in multiples:
        g = gcd(g, a)
    if g == 0 or m % g != 0:
        return None
    positives = [a for a in multiples if a > 0]
    negatives = [a for a in multiples if a < 0]
    if not negatives:
        return _semigroup_rep(m, list(multiples)) if m >= 0 else None
    if not positives:
        return _semigroup_rep(-m, [-a for a in multiples]) if m <= 0 else None

    # running Bezout combination over all multiples, scaled to m
    combo = [0] * len(multiples)
    run = 0
    for i, a in enumerate(multiples):
        if run == 0:
            run = a
            combo = [0] * len(multiples)
            combo[i] = 1
            continue
        s, t = _bezout(run, a)
        new = s * run + t * a
        combo = [s * c for c in combo]
        combo[i] += t
        run = new
    if run < 0:
        run = -run
        combo = [-c for c in combo]
    scale = m // run
    combo = [c * scale for c in combo]

    nval = negatives[0]
    iq = multiples.index(nval)
    p = positives[0]
    ip = multiples.index(p)
    width = -nval
    reduced = [c % width for c in combo]
    leftover = m - sum(c * a for c, a in zip(reduced, multiples))
    # each coefficient moved by a multiple of |nval|, so leftover is too
    assert leftover % width == 0
    x, y = _solve_two_coin(leftover, p, nval)
    reduced[ip] += x
    reduced[iq] += y
    if sum(c * a for c, a in zip(reduced, multiples)) != m or any(
        c < 0 for c in reduced
    ):
        raise InternalCheckError("signed line representation failed to verify")
    return reduced


def _solve_two_coin(m: int, p: int, n: int) -> tuple[int, int]:
    """Nonnegative (x, y) with x*p + y*n = m, given p > 0 > n and gcd | m."""
    g = gcd(p, -n)
    assert m % g == 0
    # extended gcd for x0*p + y0*n = g
    a, b = p, n
    xa, ya, xb, yb = 1, 0, 0, 1
    while b != 0:
        q = a // b
        a, b = b, a - q * b
        xa, xb = xb, xa - q * xb
        ya, yb = yb, ya - q * yb
    if a < 0:
        a, xa, ya = -a, -xa, -ya
    scale = m // a
    x, y = xa * scale, ya * scale
    step_x, step_y = -n // a, p // a  # both positive
    k = 0
    if x < 0:
        k = max(k, (-x + step_x - 1) // step_x)
    if y < 0:
        k = max(k, (-y + step_y - 1) // step_y)
    return x + k * step_x, y + k * step_y


def _positive_zero_combo(nonzero: list[tuple[int, Vector]]) -> list[int]:
    """For full-plane generator sets: counts z_i >= 1 with sum z_i g_i = 0.

    For each generator g, -g lies in a consecutive-direction sector of
    opening under 180 degrees; clearing denominators gives an all-integer
    cancelling relation.  Summing one relation per generator makes every
    count strictly positive.
    """
    dirs: dict[Vector, int] = {}
    for pos, (idx, g) in enumerate(nonzero):
        d = _primitive(g)
        dirs.setdefault(d, pos)
    order = sorted(dirs, key=cmp_to_key(_angle_cmp))
    z = [0] * len(nonzero)
    for pos, (idx, g) in enumerate(nonzero):
        t = (-g[0], -g[1])
        placed = False
        for j in range(len(order)):
            u = order[j]
            w = order[(j + 1) % len(order)]
            delta = cross(u, w)
            if delta <= 0:
                continue
            a = cross(t, w)
            b = cross(u, t)
            if a >= 0 and b >= 0:
                # delta * g + a * u_gen + b * w_gen = 0 after rescaling to
                # the representative generators along u and w
                pu, ugen = dirs[u], nonzero[dirs[u]][1]
                pw, wgen = dirs[w], nonzero[dirs[w]][1]
                su = inf_norm(ugen) // inf_norm(u)  # ugen = su * u
                sw = inf_norm(wgen) // inf_norm(w)
                lcm_u = su
                lcm_w = sw
                # scale the whole relation so u/w coefficients are integer
                # counts of the representative generators
                scale = lcm_u * lcm_w
                z[pos] += delta * scale
                z[pu] += a * lcm_w
                z[pw] += b * lcm_u
                placed = True
                break
        if not placed:
            raise InternalCheckError(
                f"no cancelling sector found for generator {g}"
            )
    total = (
        sum(z[i] * g[0] for i, (_, g) in enumerate(nonzero)),
        sum(z[i] * g[1] for i, (_, g) in enumerate(nonzero)),
    )
    if total != (0, 0) or any(c < 1 for c in z):
        raise InternalCheckError("zero-effect combination failed to verify")
    return z


def _finish(
    vas: VasSystem, v: Vector, counts_by_index: dict[int, int]
) -> IntConeResult:
    coeffs = [0] * len(vas.generators)
    for idx, c in counts_by_index.items():
        coeffs[idx] = c
    acc = (0, 0)
    for idx, c in enumerate(coeffs):
        g = vas.generators[idx]
        acc = (acc[0] + c * g[0], acc[1] + c * g[1])
    if acc != v or any(c < 0 for c in coeffs):
        raise InternalCheckError(
            f"integer-cone coefficients failed to reproduce {v}"
        )
    return IntConeResult(Membership.MEMBER, tuple(coeffs))


def _int_cone_proper(
    vas: VasSystem,
    cone: ConeData,
    v: Vector,
    nonzero: list[tuple[int, Vector]],
    budget: int,
) -> IntConeResult:
    assert cone.chi1 is not None and cone.chi2 is not None
    i1 = next(i for i, g in nonzero if _primitive(g) == cone.chi1)
    i2 = next(i for i, g in nonzero if _primitive(g) == cone.chi2)
    u1 = vas.generators[i1]
    u2 = vas.generators[i2]
    det = cross(u1, u2)
    d_abs = abs(det)
    others = [(i, g) for i, g in nonzero if i not in (i1, i2)]
    f1, f2 = cone.facets

    if d_abs ** len(others) <= budget:
        # any solution can be normalized so every non-extremal coefficient is
        # under |det|: |det| copies of g trade for nonnegative extremal copies
        for combo in itertools.product(range(d_abs), repeat=len(others)):
            r = v
            for c, (_, g) in zip(combo, others):
                r = (r[0] - c * g[0], r[1] - c * g[1])
            if dot(f1, r) < 0 or dot(f2, r) < 0:
                continue
            qa, ra = divmod(cross(r, u2), det)
            qb, rb = divmod(cross(u1, r), det)
            if ra == 0 and rb == 0 and qa >= 0 and qb >= 0:
                counts = {i1: qa, i2: qb}
                for c, (i, _) in zip(combo, others):
                    counts[i] = counts.get(i, 0) + c
                return _finish(vas, v, counts)
        return IntConeResult(Membership.NON_MEMBER)

    # fallback: BFS over the facet-coordinate window, which is finite for a
    # pointed cone; exact if it drains before the budget
    start = (0, 0)
    bound1, bound2 = dot(f1, v), dot(f2, v)
    seen = {start}
    parent: dict[Vector, tuple[Vector, int]] = {}
    frontier = deque([start])
    while frontier:
        p = frontier.popleft()
        for idx, g in nonzero:
            q = (p[0] + g[0], p[1] + g[1])
            if q in seen:
                continue
            if not (0 <= dot(f1, q) <= bound1 and 0 <= dot(f2, q) <= bound2):
                continue
            seen.add(q)
            parent[q] = (p, idx)
            if q == v:
                counts: dict[int, int] = {}
                node = q
                while node != start:
                    node, idx2 = parent[node]
                    counts[idx2] = counts.get(idx2, 0) + 1
                return _finish(vas, v, counts)
            if len(seen) > budget:
                return IntConeResult(Membership.UNDECIDED)
            frontier.append(q)
    return IntConeResult(Membership.NON_MEMBER)


def _int_cone_half_plane(
    vas: VasSystem,
    cone: ConeData,
    v: Vector,
    nonzero: list[tuple[int, Vector]],
    budget: int,
) -> IntConeResult:
    (f,) = cone.facets
    height = dot(f, v)
    boundary = [(i, g) for i, g in nonzero if dot(f, g) == 0]
    interior = [(i, g) for i, g in nonzero if dot(f, g) > 0]
    b = _primitive(boundary[0][1])
    b_mults = [_line_multiple(b, g) for _, g in boundary]
    assert all(m is not None for m in b_mults)
    g_b = 0
    for m in b_mults:
        g_b = gcd(g_b, m)  # type: ignore[arg-type]

    if height == 0:
        m_v = _line_multiple(b, v)
        if m_v is None:
            return IntConeResult(Membership.NON_MEMBER)
        rep = _signed_line_rep(m_v, b_mults)  # type: ignore[arg-type]
        if rep is None:
            return IntConeResult(Membership.NON_MEMBER)
        return _finish(vas, v, {i: c for (i, _), c in zip(boundary, rep) if c})

    # complete b to a basis (b, p) with cross(b, p) = 1; psi(z) is the
    # b-coordinate of z, well defined mod g_b once heights cancel
    x0, y0 = b
    s, t = _bezout(x0, y0)  # s*x0 + t*y0 = 1 since b is primitive
    p = (-t, s)
    assert cross(b, p) == 1

    def psi(z: Vector) -> int:
        return cross(z, p)

    if not interior:
        return IntConeResult(Membership.NON_MEMBER)
    heights = [dot(f, g) for _, g in interior]
    psis = [psi(g) for _, g in interior]
    h0 = min(heights)
    j0 = heights.index(h0)
    mod = g_b if g_b > 0 else 1
    k0 = mod // gcd(psis[j0] % mod, mod) if mod > 1 else 1
    period = h0 * k0
    if period * mod > budget:
        return IntConeResult(Membership.UNDECIDED)

    # minimal achievable interior height per (height mod period, psi residue)
    dist: dict[tuple[int, int], int] = {(0, 0): 0}
    pred: dict[tuple[int, int], tuple[tuple[int, int], int]] = {}
    heap = [(0, (0, 0))]
    while heap:
        val, key = heapq.heappop(heap)
        if val != dist.get(key):
            continue
        for j, (h, ps) in enumerate(zip(heights, psis)):
            nv = val + h
            nk = (nv % period, (key[1] + ps) % mod)
            if nv < dist.get(nk, nv + 1):
                dist[nk] = nv
                pred[nk] = (key, j)
                heapq.heappush(heap, (nv, nk))
    target_key = (height % period, psi(v) % mod)
    if target_key not in dist or dist[target_key] > height:
        return IntConeResult(Membership.NON_MEMBER)
    counts = [0] * len(interior)
    key = target_key
    while key != (0, 0):
        key, j = pred[key]
        counts[j] += 1
    # pad the remaining height in whole k0-blocks of the smallest coin, which
    # add `period` height each and preserve the psi residue
    assert (height - dist[target_key]) % period == 0
    counts[j0] += (height - dist[target_key]) // period * k0

    used = (0, 0)
    for c, (_, g) in zip(counts, interior):
        used = (used[0] + c * g[0], used[1] + c * g[1])
    residual = vec_sub(v, used)
    m_res = _line_multiple(b, residual)
    if m_res is None:
        raise InternalCheckError("half-plane residual left the boundary line")
    rep = _signed_line_rep(m_res, b_mults)  # type: ignore[arg-type]
    if rep is None:
        raise InternalCheckError("half-plane residual escaped the boundary group")
    all_counts: dict[int, int] = {}
    for c, (i, _) in zip(counts, interior):
        if c:
            all_counts[i] = all_counts.get(i, 0) + c
    for c, (i, _) in zip(rep, boundary):
        if c:
            all_counts[i] = all_counts.get(i, 0) + c
    return _finish(vas, v, all_counts)


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(s, t) with s*a + t*b = gcd(a, b) (gcd taken positive)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _int_cone_with(
    vas: VasSystem,
    cone: ConeData,
    solver: _LatticeSolver,
    v: Vector,
    budget: int,
) -> IntConeResult:
    if v == (0, 0):
        return IntConeResult(Membership.MEMBER, (0,) * len(vas.generators))
    if any(dot(f, v) < 0 for f in cone.facets):
        return IntConeResult(Membership.NON_MEMBER)
    lam = solver.solve(v)
    if lam is None:
        return IntConeResult(Membership.NON_MEMBER)
    nonzero = [(i, g) for i, g in enumerate(vas.generators) if g != (0, 0)]

    if cone.kind is ConeKind.ZERO_ONLY:
        return IntConeResult(Membership.NON_MEMBER)
    if cone.kind is ConeKind.RAY:
        b = cone.chi1
        assert b is not None
        m_v = _line_multiple(b, v)
        if m_v is None or m_v < 0:
            return IntConeResult(Membership.NON_MEMBER)
        coins = [_line_multiple(b, g) for _, g in nonzero]
        if min(c for c in coins) > budget:  # type: ignore[type-var]
            return IntConeResult(Membership.UNDECIDED)
        rep = _semigroup_rep(m_v, coins)  # type: ignore[arg-type]
        if rep is None:
            return IntConeResult(Membership.NON_MEMBER)
        return _finish(vas, v, {i: c for (i, _), c in zip(nonzero, rep) if c})
    if cone.kind is ConeKind.LINE:
        b = cone.chi1
        assert b is not None
        m_v = _line_multiple(b, v)
        if m_v is None:
            return IntConeResult(Membership.NON_MEMBER)
        mults = [_line_multiple(b, g) for _, g in nonzero]
        rep = _signed_line_rep(m_v, mults)  # type: ignore[arg-type]
        if rep is None:
            return IntConeResult(Membership.NON_MEMBER)
        return _finish(vas, v, {i: c for (i, _), c in zip(nonzero, rep) if c})
    if cone.kind is ConeKind.FULL_PLANE:
        z = _positive_zero_combo(nonzero)
        shift = 0
        for (i, _), zi in zip(nonzero, z):
            if lam[i] < 0:
                need = (-lam[i] + zi - 1) // zi
                shift = max(shift, need)
        counts: dict[int, int] = {}
        for pos, (i, _) in enumerate(nonzero):
            counts[i] = lam[i] + shift * z[pos]
        return _finish(vas, v, counts)
    if cone.kind is ConeKind.HALF_PLANE:
        return _int_cone_half_plane(vas, cone, v, nonzero, budget)
    return _int_cone_proper(vas, cone, v, nonzero, budget)


def int_cone_member(
    vas: VasSystem, v: Sequence[int], coeff_budget: int | None = None
) -> IntConeResult:
    """Exact membership of v in the nonnegative-integer span of the generators.

    Returns MEMBER with reproducing coefficients, NON_MEMBER, or UNDECIDED
    when the configured budget was exhausted before a sound answer was found.
    """
    _require_dim2(vas)
    budget = coeff_budget if coeff_budget is not None else DEFAULT_INT_CONE_BUDGET
    cone = cone_from_generators(vas)
    solver = _LatticeSolver(vas.generators)
    return _int_cone_with(vas, cone, solver, tuple(int(x) for x in v), budget)


def ditc_falsification_scan(
    vas: VasSystem,
    m: "DeepConstant | int",
    radius: int,
    coeff_budget: int | None = None,
) -> DitcScanReport:
    """Scan all integer points of infinity-norm at most ``radius`` that are
    m-deep lattice members and report any that are not integer-cone members.

    An empty report is evidence (not proof) that m is deep enough for this
    instance; undecided points are listed separately, never counted as clean.
    """
    _require_dim2(vas)
    if radius < 0:
        raise PreconditionError("radius must be nonnegative")
    mv = _deep_value(m)
    budget = coeff_budget if coeff_budget is not None else DEFAULT_INT_CONE_BUDGET
    cone = cone_from_generators(vas)
    solver = _LatticeSolver(vas.generators)
    bad: list[Vector] = []
    undecided: list[Vector] = []
    checked = 0
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            v = (x, y)
            if not is_m_deep(cone, v, mv):
                continue
            if solver.solve(v) is None:
                continue
            checked += 1
            res = _int_cone_with(vas, cone, solver, v, budget)
            if res.status is Membership.NON_MEMBER:
                bad.append(v)
            elif res.status is Membership.UNDECIDED:
                undecided.append(v)
    return DitcScanReport(
        counterexamples=tuple(bad),
        undecided=tuple(undecided),
        deep_lattice_points=checked,
        radius=radius,
        m_value=mv,
    )


def compute_seed(vas: VasSystem) -> SeedVector:
    """A strictly positive box-reachable vector s with its scaled copy 2*norm*s.

    Either some generator is already strictly positive, or an axis generator
    (x, 0) is combined with a (x', y'), y' > 0 generator via the staircase
    path u1^(-x') u2 u1^(-x'+1); the axis-swapped case is symmetric.
    """
    _require_dim2(vas)
    gens = vas.generators
    repeat = 2 * vas.norm

    def package(s: Vector, indices: list[int]) -> SeedVector:
        witness = PathRecord.record(vas, indices)
        s_pos = vec_scale(repeat, s)
        seed = SeedVector(s=s, s_pos=s_pos, witness=witness, repeat=repeat)
        if not (s[0] >= 1 and s[1] >= 1):
            raise InternalCheckError(f"seed {s} is not strictly positive")
        if not is_box_reaching_trace(vas, witness.indices, s):
            raise InternalCheckError(f"seed witness does not box-reach {s}")
        if not is_box_reaching_trace(vas, seed.pos_witness_indices(), s_pos):
            raise InternalCheckError(f"repeated witness does not box-reach {s_pos}")
        if not (s_pos[0] >= repeat and s_pos[1] >= repeat):
            raise InternalCheckError("scaled seed lost its lower bound")
        if inf_norm(s_pos) > 8 * vas.norm**3:
            raise InternalCheckError("scaled seed exceeds the cubic norm bound")
        return seed

    for i, g in enumerate(gens):
        if g[0] > 0 and g[1] > 0:
            return package(g, [i])

    # no strictly positive generator: look for an axis generator to pump
    x_axis = next(
        (i for i, g in enumerate(gens) if g[0] > 0 and g[1] == 0), None
    )
    y_axis = next(
        (i for i, g in enumerate(gens) if g[1] > 0 and g[0] == 0), None
    )
    if x_axis is None and y_axis is None:
        raise DegenerateSystemError(
            "no generator with nonnegative coordinates is available as a first "
            "step, so only the origin is reachable"
        )
    if x_axis is not None:
        i1 = x_axis
        x = gens[i1][0]
        i2 = next((i for i, g in enumerate(gens) if g[1] > 0), None)
        if i2 is None:
            raise DegenerateSystemError(
                "reachability is confined to the x axis; use the "
                "one-dimensional analysis instead"
            )
        xp, yp = gens[i2]
        # with no strictly positive generator, xp <= 0 here
        s = ((-2 * xp + 1) * x + xp, yp)
        indices = [i1] * (-xp) + [i2] + [i1] * (-xp + 1)
        return package(s, indices)
    i1 = y_axis
    assert i1 is not None
    y = gens[i1][1]
    i2 = next((i for i, g in enumerate(gens) if g[0] > 0), None)
    if i2 is None:
        raise DegenerateSystemError(
            "reachability is confined to the y axis; use the one-dimensional "
            "analysis instead"
        )
    xp, yp = gens[i2]
    s = (xp, (-2 * yp + 1) * y + yp)
    indices = [i1] * (-yp) + [i2] + [i1] * (-yp + 1)
    return package(s, indices)


def facet_product_bound_check(cone: ConeData, v: Sequence[int]) -> bool:
    """For a pointed cone with one strictly positive and one strictly negative
    extremal: check <v, f_pos> <= norm * <v, f_neg>.

    Preconditions: v >= 0 and <f_pos, v> >= 0, where f_pos is the facet
    normal paired with the strictly positive extremal.  (For v on the other
    side of that facet the inequality genuinely fails, so cone-side
    membership is part of the contract.)
    """
    if cone.kind is not ConeKind.PROPER_CONE:
        raise PreconditionError("facet product bound requires a pointed cone")
    assert cone.chi1 is not None and cone.chi2 is not None
    pairs = list(zip((cone.chi1, cone.chi2), cone.facets))
    pos = next(
        ((c, f) for c, f in pairs if c[0] > 0 and c[1] > 0), None
    )
    neg = next(
        ((c, f) for c, f in pairs if c[0] < 0 and c[1] < 0), None
    )
    if pos is None or neg is None:
        raise PreconditionError(
            "expected one strictly positive and one strictly negative extremal"
        )
    v = tuple(int(x) for x in v)
    if v[0] < 0 or v[1] < 0:
        raise PreconditionError("v must be componentwise nonnegative")
    _, f_pos = pos
    _, f_neg = neg
    if dot(f_pos, v) < 0:
        raise PreconditionError("v must lie on the cone side of the positive facet")
    return dot(v, f_pos) <= cone.norm * dot(v, f_neg)
