import pytest
from hypothesis import given, strategies as st

from boxvas import (
    MalformedPathError,
    PathRecord,
    VasSystem,
    drop_peak,
    effect,
    is_box_reaching_trace,
    is_valid_n_trace,
    overshoot,
    prefix_effects,
)

ZIGZAG = VasSystem(2, ((1, 7), (3, -6), (-2, 6)))


def test_system_validation():
    with pytest.raises(ValueError):
        VasSystem(0, ())
    with pytest.raises(ValueError):
        VasSystem(2, ((1,),))
    v = VasSystem(2, ((-1, 2), (2, -1), (10, 10)))
    assert v.norm == 2 * (2 + 2 + 10)


def test_effect_examples(ex1):
    assert effect(ex1, [2, 0, 1]) == (11, 11)
    assert effect(ex1, []) == (0, 0)
    assert effect(ZIGZAG, [0, 1]) == (4, 1)
    with pytest.raises(MalformedPathError):
        effect(ex1, [3])


def test_drop_peak_examples(ex1):
    # path (10,10),(-1,2),(2,-1): prefix (9,12) sets the y peak
    _, peak = drop_peak(ex1, [2, 0, 1])
    assert peak == (11, 12)
    assert drop_peak(ex1, []) == ((0, 0), (0, 0))
    # path (2,-1),(-1,2): prefixes (2,-1), (1,1)
    drop, peak = drop_peak(ex1, [1, 0])
    assert drop == (0, 1)
    assert peak == (2, 1)


def test_overshoot_examples(ex1):
    one = VasSystem(1, ((2,), (-1,)))
    assert overshoot(one, [0, 1]) == (1,)
    # alpha beta^k projected on x: over = 2 regardless of k
    for k in (1, 2, 3):
        path = [0] + [1, 2] * k
        assert overshoot(ZIGZAG, path)[0] == 2
    mono = VasSystem(2, ((1, 0), (0, 1)))
    assert overshoot(mono, [0, 1, 0, 1]) == (0, 0)


def test_valid_n_trace_examples(ex1):
    assert is_valid_n_trace(ex1, [2] + [1] * 10, (0, 0))
    assert not is_valid_n_trace(ex1, [0], (0, 0))
    assert is_valid_n_trace(ex1, [1, 0], (0, 1))


def test_box_reaching_examples(ex1):
    assert is_box_reaching_trace(ex1, [2, 0, 1, 2], (21, 21))
    assert not is_box_reaching_trace(ex1, [2, 0, 1], (11, 11))
    assert is_box_reaching_trace(ex1, [], (0, 0))


def test_prefix_effects_starts_empty(ex1):
    effs = list(prefix_effects(ex1, [2, 0]))
    assert effs == [(0, 0), (10, 10), (9, 12)]


def test_path_record(ex1):
    rec = PathRecord.record(ex1, [2, 0, 1, 2])
    assert rec.effect == (21, 21)
    assert len(rec) == 4
    assert rec.drop == (0, 0)


paths = st.lists(st.integers(min_value=0, max_value=2), max_size=12)


@given(paths, paths)
def test_concatenation_properties(p, q):
    vas = ZIGZAG
    eff_p = effect(vas, p)
    eff_q = effect(vas, q)
    assert effect(vas, p + q) == tuple(a + b for a, b in zip(eff_p, eff_q))
    _, peak_p = drop_peak(vas, p)
    _, peak_q = drop_peak(vas, q)
    _, peak_pq = drop_peak(vas, p + q)
    assert peak_pq == tuple(
        max(pp, ep + pq_) for pp, ep, pq_ in zip(peak_p, eff_p, peak_q)
    )


@given(paths)
def test_drop_peak_bracket_effect(p):
    vas = ZIGZAG
    eff = effect(vas, p)
    drop, peak = drop_peak(vas, p)
    for k in range(2):
        assert drop[k] >= 0 and peak[k] >= 0
        assert -drop[k] <= eff[k] <= peak[k]


@given(paths, st.tuples(st.integers(0, 30), st.integers(0, 30)))
def test_box_reaching_implies_valid_trace(p, target):
    vas = ZIGZAG
    if is_box_reaching_trace(vas, p, target):
        assert is_valid_n_trace(vas, p, (0, 0))
        assert effect(vas, p) == target
