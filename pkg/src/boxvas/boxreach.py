"""Box-reachability deciders, thresholds, and constructive witness synthesis.

The two grid deciders are deliberately distinct implementations (plain BFS
vs. bitmap fixpoint) so they can differentially test each other.  The
threshold W is the bound above which reachability and box-reachability
coincide for 2-dimensional systems; ``synthesize_box_witness`` rebuilds the
corresponding constructive proof, emitting an actual box-reaching path that
is re-verified before being returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ._search import DEFAULT_NODE_BUDGET, bfs_grid, bitmap_has, reachable_bitmap
from .core import (
    PathRecord,
    VasSystem,
    Vector,
    check_target,
    dot,
    effect,
    is_box_reaching_trace,
    is_valid_n_trace,
    vec_scale,
    vec_sub,
)
from .errors import (
    EvidenceError,
    InternalCheckError,
    PreconditionError,
    ResourceBudgetError,
    UnsupportedDimensionError,
)
from .geometry import (
    ConeData,
    ConeKind,
    DeepConstant,
    Membership,
    QuadrantRelation,
    _primitive,
    compute_seed,
    cone_from_generators,
    default_deep_constant,
    int_cone_member,
    is_m_deep,
)
from .steinitz import reorder_counts


class ThresholdCase(Enum):
    CONTAINS_QUADRANT = "contains-quadrant"
    CONTAINED_IN_QUADRANT = "contained-in-quadrant"
    INTERSECTS_QUADRANT = "intersects-quadrant"
    ONE_DIMENSIONAL = "one-dimensional"
    HALF_OR_FULL_PLANE = "half-or-full-plane"
    DEGENERATE = "degenerate"


class WitnessMethod(Enum):
    BFS_SEARCH = "bfs-search"
    PROOF_CASE_1 = "proof-case-1"
    PROOF_CASE_2 = "proof-case-2"


@dataclass(frozen=True)
class ThresholdReport:
    w: int
    case_tag: ThresholdCase
    m_used: DeepConstant
    formula_trace: str
    degenerate: bool = False


@dataclass(frozen=True)
class WitnessBundle:
    path: PathRecord
    target: Vector
    method: WitnessMethod


@dataclass(frozen=True)
class OneVasThreshold:
    m1: int
    min_step: int
    degenerate: bool


@dataclass(frozen=True)
class WindowReport:
    violations: tuple[Vector, ...]
    skipped: tuple[Vector, ...]
    checked: int
    window_lo: Vector
    window_size: Vector
    cap_margin: int


def _bundle(
    vas: VasSystem, indices: Sequence[int], target: Vector, method: WitnessMethod
) -> WitnessBundle:
    record = PathRecord.record(vas, indices)
    if not is_box_reaching_trace(vas, record.indices, target):
        raise InternalCheckError(
            f"constructed witness does not box-reach {target}"
        )
    return WitnessBundle(path=record, target=target, method=method)


def decide_box_reach(
    vas: VasSystem,
    target: Sequence[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[bool, WitnessBundle | None]:
    """Exact decision by BFS over the grid [0, target]; witness on success."""
    t = check_target(target, vas.dim)
    path = bfs_grid(vas.generators, t, t, node_budget)
    if path is None:
        return False, None
    return True, _bundle(vas, path, t, WitnessMethod.BFS_SEARCH)


def decide_reach_capped(
    vas: VasSystem,
    target: Sequence[int],
    cap: Sequence[int],
    node_budget: int = DEFAULT_NODE_BUDGET,
    want_witness: bool = False,
) -> tuple[bool, WitnessBundle | None]:
    """Reachability of ``target`` with every intermediate point within ``cap``.

    The default engine is the bitmap fixpoint (decision only); requesting a
    witness switches to the BFS engine.
    """
    t = check_target(target, vas.dim)
    c = check_target(cap, vas.dim)
    if not all(x <= y for x, y in zip(t, c)):
        raise PreconditionError(f"target {t} exceeds cap {c}")
    if want_witness:
        path = bfs_grid(vas.generators, c, t, node_budget)
        if path is None:
            return False, None
        record = PathRecord.record(vas, path)
        if effect(vas, record.indices) != t or not is_valid_n_trace(
            vas, record.indices, (0,) * vas.dim
        ):
            raise InternalCheckError("capped witness failed re-verification")
        return True, WitnessBundle(record, t, WitnessMethod.BFS_SEARCH)
    bitmap = reachable_bitmap(vas.generators, c, node_budget)
    return bitmap_has(bitmap, c, t), None


def one_dim_min_peaks(steps: Sequence[int], ceiling: int) -> list[int | None]:
    """For each value v in [0, ceiling]: the smallest peak bound under which
    v is reachable from 0 (prefixes confined to [0, peak]), or None.

    Incremental-ceiling closure: raising the ceiling by one admits the new
    top value, whose closure is a single BFS; every value is settled once.
    """
    if ceiling < 0:
        raise PreconditionError("ceiling must be nonnegative")
    minpeak: list[int | None] = [None] * (ceiling + 1)
    minpeak[0] = 0
    for c in range(1, ceiling + 1):
        if minpeak[c] is not None:
            continue
        # a path with peak exactly c must step onto c from a value that was
        # reachable under the previous ceiling
        if not any(
            0 <= c - a < c and minpeak[c - a] is not None for a in steps
        ):
            continue
        minpeak[c] = c
        queue = [c]
        while queue:
            u = queue.pop()
            for a in steps:
                w = u + a
                if 0 <= w <= c and minpeak[w] is None:
                    minpeak[w] = c
                    queue.append(w)
    return minpeak


def _one_dim_steps(vas: VasSystem) -> list[int] | None:
    """Project a 1-dimensional (or collinear nonnegative-direction 2-D)
    system to scalar steps; None when the projection does not apply."""
    if vas.dim == 1:
        return [g[0] for g in vas.generators]
    if vas.dim != 2:
        return None
    nonzero = [g for g in vas.generators if any(g)]
    if not nonzero:
        return [0 for _ in vas.generators]
    d = _primitive(nonzero[0])
    if d[0] < 0 or (d[0] == 0 and d[1] < 0):
        d = (-d[0], -d[1])
    for g in nonzero:
        p = _primitive(g)
        if p != d and p != (-d[0], -d[1]):
            return None
    if d[0] < 0 or d[1] < 0:
        return None  # mixed-sign direction: nothing but 0 is reachable
    coord = 0 if d[0] != 0 else 1
    return [g[coord] for g in vas.generators]


def one_vas_threshold(vas: VasSystem) -> OneVasThreshold:
    """The bound above which reachability equals box-reachability for a
    one-dimensional system.

    Takes the maximum of 2*norm^3 (above which reachability reduces to a
    small-residue representative) and the minimal peaks of all reachable
    representatives up to norm^3.
    """
    steps = _one_dim_steps(vas)
    if steps is None:
        raise PreconditionError(
            "system is not one-dimensional (generators span two directions)"
        )
    positive = [a for a in steps if a > 0]
    if not positive:
        return OneVasThreshold(m1=0, min_step=0, degenerate=True)
    d_min = min(positive)
    norm = vas.norm
    rep_bound = norm**3
    ceiling = 2 * norm**3 + 2 * norm
    peaks = one_dim_min_peaks([a for a in steps if a != 0], ceiling)
    best = 2 * norm**3
    for k in range(min(rep_bound, ceiling) + 1):
        p = peaks[k]
        if p is not None and p > best:
            best = p
    return OneVasThreshold(m1=best, min_step=d_min, degenerate=False)


def compute_threshold(
    vas: VasSystem, m: DeepConstant | None = None
) -> ThresholdReport:
    """The threshold W for a 2-VAS, dispatching on the cone/quadrant shape."""
    if vas.dim != 2:
        raise UnsupportedDimensionError("threshold computation requires dim 2")
    m_used = m if m is not None else default_deep_constant(vas)
    n = vas.norm
    cone = cone_from_generators(vas)

    if cone.kind is ConeKind.ZERO_ONLY:
        return ThresholdReport(
            0,
            ThresholdCase.DEGENERATE,
            m_used,
            "reach = {0}; W vacuous",
            degenerate=True,
        )
    if cone.quadrant_relation is QuadrantRelation.CONTAINED_IN_QUADRANT:
        return ThresholdReport(
            0,
            ThresholdCase.CONTAINED_IN_QUADRANT,
            m_used,
            "all generators nonnegative; W = 0",
        )
    if cone.kind in (ConeKind.RAY, ConeKind.LINE):
        steps = _one_dim_steps(vas)
        if steps is None or not any(a > 0 for a in steps):
            return ThresholdReport(
                0,
                ThresholdCase.DEGENERATE,
                m_used,
                "one-dimensional with no positive direction; reach = {0}",
                degenerate=True,
            )
        one = one_vas_threshold(vas)
        return ThresholdReport(
            one.m1,
            ThresholdCase.ONE_DIMENSIONAL,
            m_used,
            f"one-dimensional; W = M1 = {one.m1}",
        )
    if cone.kind in (ConeKind.HALF_PLANE, ConeKind.FULL_PLANE):
        w = 16 * n**3 + m_used.value
        return ThresholdReport(
            w,
            ThresholdCase.HALF_OR_FULL_PLANE,
            m_used,
            f"W = 16*norm^3 + M = 16*{n}^3 + {m_used.value} = {w}",
        )
    if cone.quadrant_relation is QuadrantRelation.CONTAINS_QUADRANT:
        w = 16 * n**3 + m_used.value
        return ThresholdReport(
            w,
            ThresholdCase.CONTAINS_QUADRANT,
            m_used,
            f"W = 16*norm^3 + M = 16*{n}^3 + {m_used.value} = {w}",
        )
    if cone.quadrant_relation in (
        QuadrantRelation.INTERSECTS_VIA_X_AXIS_SIDE,
        QuadrantRelation.INTERSECTS_VIA_Y_AXIS_SIDE,
    ):
        w = 16 * n**4 + 4 * n + n * m_used.value
        return ThresholdReport(
            w,
            ThresholdCase.INTERSECTS_QUADRANT,
            m_used,
            f"W = 16*norm^4 + 4*norm + norm*M = 16*{n}^4 + 4*{n} + "
            f"{n}*{m_used.value} = {w}",
        )
    # the cone meets the nonnegative quadrant only at the origin
    return ThresholdReport(
        0,
        ThresholdCase.DEGENERATE,
        m_used,
        "cone meets the quadrant only at 0; reach = {0}",
        degenerate=True,
    )


def _axis_flip(vas: VasSystem) -> VasSystem:
    return VasSystem(2, tuple((g[1], g[0]) for g in vas.generators))


def _positive_facet(cone: ConeData) -> tuple[Vector, Vector]:
    """(chi, facet) for the strictly positive extremal of an
    intersects-quadrant cone."""
    assert cone.chi1 is not None and cone.chi2 is not None
    for chi, f in zip((cone.chi1, cone.chi2), cone.facets):
        if chi[0] > 0 and chi[1] > 0:
            return chi, f
    raise InternalCheckError("no strictly positive extremal in intersect case")


def synthesize_box_witness(
    vas: VasSystem,
    target: Sequence[int],
    coefficients: Sequence[int] | None = None,
    path: Sequence[int] | None = None,
    m: DeepConstant | None = None,
    coeff_budget: int | None = None,
) -> WitnessBundle:
    """Build a box-reaching path to a target at or above the threshold W.

    Evidence that the target is reachable must be supplied: nonnegative
    generator coefficients, or an unconstrained-from-above path.  The shallow
    branch of the intersects-quadrant case consumes facet-parallel steps of
    the evidence path, so coefficients alone are rejected there.
    The result is re-verified before being returned.
    """
    if vas.dim != 2:
        raise UnsupportedDimensionError("witness synthesis requires dim 2")
    t = check_target(target, 2)
    if (coefficients is None) == (path is None):
        raise PreconditionError(
            "supply exactly one of coefficients= or path= as evidence"
        )

    counts: list[int]
    if coefficients is not None:
        counts = [int(c) for c in coefficients]
        if len(counts) != len(vas.generators) or any(c < 0 for c in counts):
            raise PreconditionError(
                "coefficients must be one nonnegative integer per generator"
            )
        acc = (0, 0)
        for c, g in zip(counts, vas.generators):
            acc = (acc[0] + c * g[0], acc[1] + c * g[1])
        if acc != t:
            raise PreconditionError(
                f"coefficients sum to {acc}, not the target {t}"
            )
    else:
        assert path is not None
        vas.check_path(path)
        if effect(vas, path) != t:
            raise PreconditionError("evidence path does not end at the target")
        if not is_valid_n_trace(vas, path, (0, 0)):
            raise PreconditionError("evidence path leaves the nonnegative quadrant")
        counts = [0] * len(vas.generators)
        for i in path:
            counts[i] += 1

    report = compute_threshold(vas, m)
    if report.degenerate:
        raise PreconditionError("degenerate system: threshold is vacuous")
    if report.case_tag is ThresholdCase.ONE_DIMENSIONAL:
        # the threshold constrains the value along the reachable ray, not
        # both coordinates (an axis ray has one coordinate pinned to 0)
        if max(t) < report.w:
            raise PreconditionError(
                f"target {t} is below the threshold W = {report.w}"
            )
        ok, bundle = decide_box_reach(vas, t)
        if not ok or bundle is None:
            raise InternalCheckError(
                "one-dimensional target above M1 was not box-reachable"
            )
        return bundle
    if t[0] < report.w or t[1] < report.w:
        raise PreconditionError(
            f"target {t} is below the threshold W = {report.w}"
        )

    if report.case_tag is ThresholdCase.CONTAINED_IN_QUADRANT:
        # all generators nonnegative: any multiset order is box-reaching
        order = reorder_counts(vas, counts)
        return _bundle(vas, order, t, WitnessMethod.PROOF_CASE_1)

    cone = cone_from_generators(vas)
    seed = compute_seed(vas)
    theta = list(seed.pos_witness_indices())
    r = vec_sub(t, vec_scale(2, seed.s_pos))

    def case1() -> WitnessBundle:
        res = int_cone_member(vas, r, coeff_budget)
        if res.status is Membership.UNDECIDED:
            raise ResourceBudgetError(
                "integer-cone solve exhausted its budget", coeff_budget
            )
        if not res.is_member or res.coefficients is None:
            raise InternalCheckError(
                f"{r} is not an integer-cone member, contradicting the "
                "deep-point argument"
            )
        rho = reorder_counts(vas, res.coefficients)
        return _bundle(vas, theta + rho + theta, t, WitnessMethod.PROOF_CASE_1)

    if report.case_tag in (
        ThresholdCase.CONTAINS_QUADRANT,
        ThresholdCase.HALF_OR_FULL_PLANE,
    ):
        return case1()

    # intersects-quadrant: deep residuals go through case 1, shallow ones
    # consume facet-parallel steps of the evidence path
    if is_m_deep(cone, r, report.m_used):
        return case1()
    if path is None:
        raise EvidenceError(
            "shallow intersects-quadrant target: an explicit evidence path "
            "is required (coefficients are not enough)"
        )
    chi, f_pos = _positive_facet(cone)
    need = 4 * vas.norm
    chosen: list[int] = []
    for i in path:
        # facet-parallel steps are positive multiples of the strictly
        # positive extremal, so they are monotone in both coordinates
        g = vas.generators[i]
        if dot(f_pos, g) == 0 and g[0] > 0:
            chosen.append(i)
            if len(chosen) == need:
                break
    if len(chosen) < need:
        raise InternalCheckError(
            "evidence path lacks the guaranteed facet-parallel steps"
        )
    half = need // 2
    mu, eta = chosen[:half], chosen[half:]
    remaining = counts[:]
    for i in chosen:
        remaining[i] -= 1
    if any(c < 0 for c in remaining):
        raise InternalCheckError("facet-parallel extraction over-consumed steps")
    xi = reorder_counts(vas, remaining)
    return _bundle(vas, mu + xi + eta, t, WitnessMethod.PROOF_CASE_2)


def verify_window(
    vas: VasSystem,
    window_lo: Sequence[int],
    window_size: Sequence[int],
    cap_margin: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> WindowReport:
    """Sweep a rectangle of targets and report every capped-reachable target
    that is not box-reachable.

    Capped-reachable implies reachable, so any hit with the window at or
    above W falsifies the threshold guarantee or this implementation.  Targets
    whose grids exceed the node budget are listed as skipped.
    """
    if vas.dim != 2:
        raise UnsupportedDimensionError("verify_window requires dim 2")
    lo = check_target(window_lo, 2)
    size = check_target(window_size, 2)
    margin = cap_margin if cap_margin is not None else 2 * vas.norm
    if margin < 0:
        raise PreconditionError("cap_margin must be nonnegative")
    violations: list[Vector] = []
    skipped: list[Vector] = []
    checked = 0
    for x in range(lo[0], lo[0] + size[0] + 1):
        for y in range(lo[1], lo[1] + size[1] + 1):
            t = (x, y)
            cap = (x + margin, y + margin)
            try:
                capped, _ = decide_reach_capped(vas, t, cap, node_budget)
                if capped:
                    boxed, _ = decide_reach_capped(vas, t, t, node_budget)
                else:
                    boxed = False
            except ResourceBudgetError:
                skipped.append(t)
                continue
            checked += 1
            if capped and not boxed:
                violations.append(t)
    return WindowReport(
        violations=tuple(violations),
        skipped=tuple(skipped),
        checked=checked,
        window_lo=lo,
        window_size=size,
        cap_margin=margin,
    )
