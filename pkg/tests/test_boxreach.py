import random

import pytest
from hypothesis import given, settings, strategies as st

from boxvas import (
    DeepConstant,
    EvidenceError,
    PreconditionError,
    ResourceBudgetError,
    ThresholdCase,
    VasSystem,
    WitnessMethod,
    compute_threshold,
    decide_box_reach,
    decide_reach_capped,
    is_box_reaching_trace,
    one_dim_min_peaks,
    one_vas_threshold,
    synthesize_box_witness,
    verify_window,
)

from conftest import random_vas


def test_decide_box_examples(ex1):
    ok, bundle = decide_box_reach(ex1, (21, 21))
    assert ok
    assert list(bundle.path.indices) == [2, 0, 1, 2]
    assert bundle.method is WitnessMethod.BFS_SEARCH
    assert not decide_box_reach(ex1, (11, 11))[0]
    assert not decide_box_reach(ex1, (30, 0))[0]
    ok, bundle = decide_box_reach(ex1, (0, 0))
    assert ok and len(bundle.path) == 0


def test_decide_capped_examples(ex1):
    assert decide_reach_capped(ex1, (11, 11), (12, 12))[0]
    assert not decide_reach_capped(ex1, (11, 11), (11, 11))[0]
    assert decide_reach_capped(ex1, (30, 0), (30, 10))[0]
    with pytest.raises(PreconditionError):
        decide_reach_capped(ex1, (11, 11), (10, 11))


def test_capped_witness(ex1):
    ok, bundle = decide_reach_capped(ex1, (11, 11), (12, 12), want_witness=True)
    assert ok
    assert bundle.path.effect == (11, 11)
    assert all(p <= 12 for p in bundle.path.peak)


def test_budget_exhaustion(ex1):
    with pytest.raises(ResourceBudgetError):
        decide_reach_capped(ex1, (10**6, 10**6), (10**6, 10**6))


def test_threshold_example1(ex1):
    report = compute_threshold(ex1)
    assert report.case_tag is ThresholdCase.CONTAINS_QUADRANT
    assert report.w == 702464
    assert "16*28^3" in report.formula_trace
    assert not report.degenerate


def test_threshold_monotone_cases():
    report = compute_threshold(VasSystem(2, ((1, 0), (0, 1))))
    assert report.case_tag is ThresholdCase.CONTAINED_IN_QUADRANT
    assert report.w == 0


def test_threshold_intersects():
    vas = VasSystem(2, ((1, 1), (2, -1)))
    report = compute_threshold(vas)
    assert report.case_tag is ThresholdCase.INTERSECTS_QUADRANT
    # norm 6, default M = 16*6^3: 16*6^4 + 4*6 + 6*M
    assert report.w == 41496
    small = compute_threshold(vas, DeepConstant(1))
    assert small.w == 16 * 6**4 + 4 * 6 + 6 * 1


def test_threshold_half_plane():
    vas = VasSystem(2, ((1, 0), (-1, 0), (0, 1)))
    report = compute_threshold(vas)
    assert report.case_tag is ThresholdCase.HALF_OR_FULL_PLANE
    assert report.w == 16 * vas.norm**3 + report.m_used.value


def test_threshold_degenerate():
    report = compute_threshold(VasSystem(2, ((0, 0),)))
    assert report.degenerate and report.w == 0
    report = compute_threshold(VasSystem(2, ((-1, -1),)))
    assert report.case_tag is ThresholdCase.DEGENERATE
    report = compute_threshold(VasSystem(2, ((-1, -2), (-3, 0))))
    assert report.degenerate


def test_min_peaks_examples():
    peaks = one_dim_min_peaks([5, -2], 12)
    assert peaks[0] == 0
    assert peaks[5] == 5
    assert peaks[3] == 5  # 5 then -2
    assert peaks[1] == 5  # 5, -2, -2
    assert peaks[6] == 6  # 5, 3, 1, 6
    assert peaks[2] == 6  # 5, 3, 1, 6, 4, 2
    assert peaks[4] == 6
    with pytest.raises(PreconditionError):
        one_dim_min_peaks([1], -1)


def test_one_vas_threshold_examples():
    t = one_vas_threshold(VasSystem(1, ((3,), (5,))))
    assert not t.degenerate
    assert t.min_step == 3
    assert t.m1 == 2 * 8**3
    t = one_vas_threshold(VasSystem(1, ((5,), (-2,))))
    assert t.m1 == 686 and t.min_step == 5
    t = one_vas_threshold(VasSystem(1, ((-2,),)))
    assert t.degenerate and t.m1 == 0


def test_one_vas_threshold_collinear_2d():
    t = one_vas_threshold(VasSystem(2, ((2, 4), (-1, -2))))
    assert not t.degenerate
    with pytest.raises(PreconditionError):
        one_vas_threshold(VasSystem(2, ((1, 0), (0, 1))))


def test_one_vas_threshold_semantics():
    # above M1, plain reachability (value representable with some path
    # staying nonnegative) coincides with peak-bounded reachability
    vas = VasSystem(1, ((5,), (-2,)))
    t = one_vas_threshold(vas)
    peaks = one_dim_min_peaks([5, -2], t.m1 + 60)
    for k in range(t.m1, t.m1 + 50):
        if peaks[k] is not None:
            assert peaks[k] <= k


def test_synthesize_requires_one_evidence(ex1):
    with pytest.raises(PreconditionError):
        synthesize_box_witness(ex1, (21, 21))
    with pytest.raises(PreconditionError):
        synthesize_box_witness(ex1, (21, 21), coefficients=[1, 1, 2], path=[2])


def test_synthesize_rejects_bad_evidence(ex1):
    with pytest.raises(PreconditionError):
        synthesize_box_witness(ex1, (21, 21), coefficients=[1, 0, 2])
    with pytest.raises(PreconditionError):
        synthesize_box_witness(ex1, (21, 21), coefficients=[-1, -1, 2])
    with pytest.raises(PreconditionError):
        synthesize_box_witness(ex1, (21, 21), path=[0, 2, 1, 2])  # leaves quadrant


def test_synthesize_below_threshold(ex1):
    with pytest.raises(PreconditionError):
        synthesize_box_witness(ex1, (5, 5), coefficients=[5, 5, 0])


def test_synthesize_one_dimensional():
    # nonnegative-direction ray with a back step, so the one-dimensional
    # threshold branch (rather than the all-nonnegative one) applies
    vas = VasSystem(2, ((2, 2), (-1, -1)))
    report = compute_threshold(vas)
    assert report.case_tag is ThresholdCase.ONE_DIMENSIONAL
    w = report.w
    t = (w + 1, w + 1)
    bundle = synthesize_box_witness(vas, t, coefficients=[(w + 2) // 2, 1])
    assert bundle.path.effect == t
    with pytest.raises(PreconditionError):
        synthesize_box_witness(vas, (5, 5), coefficients=[3, 1])


def test_synthesize_case1(ex1):
    w = 702464
    # a*(-1,2) + a*(2,-1) + c*(10,10) = (a+10c, a+10c)
    bundle = synthesize_box_witness(ex1, (w, w), coefficients=[4, 4, 70246])
    assert bundle.method is WitnessMethod.PROOF_CASE_1
    assert bundle.path.effect == (w, w)
    assert is_box_reaching_trace(ex1, bundle.path.indices, (w, w))


def test_synthesize_case2_shallow_needs_path():
    vas = VasSystem(2, ((1, 1), (0, -1)))
    w = compute_threshold(vas).w
    assert w == 8208
    t = (w + 92, w + 92)
    with pytest.raises(EvidenceError):
        synthesize_box_witness(vas, t, coefficients=[w + 92, 0])
    bundle = synthesize_box_witness(vas, t, path=[0] * (w + 92))
    assert bundle.method is WitnessMethod.PROOF_CASE_2
    assert bundle.path.effect == t


def test_synthesize_case2_deep_goes_case1():
    vas = VasSystem(2, ((1, 1), (0, -1)))
    w = compute_threshold(vas).w
    t = (2 * (w + 92), w + 92)  # deep in the cone interior
    bundle = synthesize_box_witness(
        vas, t, coefficients=[2 * (w + 92), w + 92]
    )
    assert bundle.method is WitnessMethod.PROOF_CASE_1
    assert bundle.path.effect == t


def test_verify_window_discrepancy(ex1):
    report = verify_window(ex1, (11, 11), (0, 0))
    assert (11, 11) in report.violations
    assert report.cap_margin == 56
    for v in report.violations:
        assert not decide_box_reach(ex1, v)[0]


def test_verify_window_monotone_clean():
    vas = VasSystem(2, ((1, 0), (0, 1)))
    report = verify_window(vas, (0, 0), (5, 5))
    assert report.violations == ()
    assert report.skipped == ()
    assert report.checked == 36


def test_verify_window_skips_over_budget(ex1):
    report = verify_window(ex1, (2000, 2000), (1, 0), node_budget=10_000)
    assert report.checked == 0
    assert len(report.skipped) == 2


targets = st.tuples(st.integers(0, 12), st.integers(0, 12))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), targets)
def test_deciders_agree(seed, t):
    vas = random_vas(random.Random(seed), 2, 3, 4)
    direct = decide_box_reach(vas, t)[0]
    capped = decide_reach_capped(vas, t, t)[0]
    assert direct == capped


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), targets, st.integers(0, 6))
def test_cap_monotone(seed, t, extra):
    vas = random_vas(random.Random(seed), 2, 3, 4)
    tight = decide_reach_capped(vas, t, t)[0]
    loose = decide_reach_capped(vas, t, (t[0] + extra, t[1] + extra))[0]
    if tight:
        assert loose
