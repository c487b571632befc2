import itertools
import json
import random

import pytest

from perfquant import (
    ALL_LABELS,
    ClassLabel,
    Fragment,
    FragmentKind,
    MetricDirection,
    combine,
    compile_single,
    evaluate,
    resolve_intervals,
    set_scores,
)
from perfquant.errors import ExpectationOutOfBounds, MissingExpectation

MIN = MetricDirection.MINIMIZE
MAX = MetricDirection.MAXIMIZE
G, S, E = FragmentKind.GREATER, FragmentKind.SMALLER, FragmentKind.EQUAL


def label(codes: str) -> ClassLabel:
    return ClassLabel.from_codes(codes[0], codes[1])


class TestSetScores:
    def test_smaller_equal_smaller_series(self):
        # one monotonic series with an interleaved flat fragment
        assert set_scores([S, E, S], MIN) == [(1.0, 0.5), (0.5, 0.5), (0.5, 0.0)]

    def test_single_indistinguishable(self):
        assert set_scores([E], MIN) == [(1.0, 1.0)]
        assert set_scores([E], MAX) == [(0.0, 0.0)]

    def test_consecutive_indistinguishable_alternate(self):
        assert set_scores([E, E, E], MIN) == [(1.0, 1.0), (0.0, 0.0), (1.0, 1.0)]

    def test_two_expectation_latency_shape(self):
        assert set_scores([E, S, E, S], MIN) == [
            (1.0, 1.0),
            (1.0, 0.5),
            (0.5, 0.5),
            (0.5, 0.0),
        ]

    def test_rising_series_with_plateaus(self):
        assert set_scores([G, E, G, E], MAX) == [
            (0.0, 0.5),
            (0.5, 0.5),
            (0.5, 1.0),
            (1.0, 1.0),
        ]

    def test_initial_scores(self):
        assert set_scores([G], MIN)[0][0] == 0.0
        assert set_scores([G], MAX)[0][0] == 0.0
        assert set_scores([S], MIN)[0][0] == 1.0
        assert set_scores([S], MAX)[0][0] == 1.0

    def test_scores_stay_in_unit_interval(self):
        rng = random.Random(7)
        kinds = [G, S, E]
        for _ in range(300):
            seq = [rng.choice(kinds) for _ in range(rng.randint(1, 6))]
            for direction in (MIN, MAX):
                for lo, hi in set_scores(seq, direction):
                    assert 0.0 <= lo <= 1.0
                    assert 0.0 <= hi <= 1.0

    def test_empty_sequence_rejected(self):
        with pytest.raises(ValueError):
            set_scores([], MIN)


class TestCompileSingle:
    def test_unbounded_smaller_preference(self):
        fn = compile_single(label("SS"), None, (0, 10), MIN)
        assert len(fn.segments) == 1
        assert fn(0) == 1.0
        assert fn(5) == 0.5
        assert fn(10) == 0.0

    def test_single_expectation_latency(self):
        fn = compile_single(label("ES"), 2, (0, 10), MIN)
        assert fn(1) == 1.0
        assert fn(2) == 1.0
        assert fn(10) == 0.0
        assert fn(6) == 0.5

    def test_equal_equal_steps_down(self):
        fn = compile_single(label("EE"), 5, (0, 10), MIN)
        assert fn(2) == 1.0
        assert fn(4.999) == 1.0
        # right segment wins at the shared knot
        assert fn(5) == 0.0
        assert fn(7) == 0.0

    def test_asymmetric_label_requires_expectation(self):
        with pytest.raises(MissingExpectation):
            compile_single(label("ES"), None, (0, 10), MIN)

    def test_expectation_outside_bounds(self):
        with pytest.raises(ExpectationOutOfBounds):
            compile_single(label("ES"), 12, (0, 10), MIN)

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            compile_single(label("SS"), None, (10, 10), MIN)

    def test_segment_counts_over_all_labels(self):
        for lab in ALL_LABELS:
            if lab.symmetric:
                fn = compile_single(lab, None, (0, 10), MIN)
                assert len(fn.segments) == 1
            fn = compile_single(lab, 4, (0, 10), MIN)
            assert len(fn.segments) >= 2


class TestResolveIntervals:
    def test_conflicting_claims_split_at_midpoint(self):
        a = Fragment(S, 2, 5, 1.0, 0.5)
        b = Fragment(E, 2, 5, 0.5, 0.5)
        ra, rb = resolve_intervals(a, b)
        assert (ra.v_lo, ra.v_hi) == (2, 3.5)
        assert (rb.v_lo, rb.v_hi) == (3.5, 5)
        assert ra.kind is S and rb.kind is E

    def test_disjoint_intervals_untouched(self):
        a = Fragment(E, 0, 2, 1.0, 1.0)
        b = Fragment(S, 2, 10, 1.0, 0.0)
        assert resolve_intervals(a, b) == (a, b)

    def test_identical_quantification_untouched(self):
        a = Fragment(E, 1, 3, 1.0, 1.0)
        b = Fragment(E, 1, 3, 1.0, 1.0)
        assert resolve_intervals(a, b) == (a, b)

    def test_idempotent(self):
        a = Fragment(S, 2, 5, 1.0, 0.5)
        b = Fragment(E, 2, 5, 0.5, 0.5)
        once = resolve_intervals(a, b)
        assert resolve_intervals(*once) == once


class TestCombine:
    def test_two_expectation_latency_reproduction(self):
        fn = combine([(label("ES"), 2), (label("ES"), 5)], (0, 10), MIN)
        assert fn(1) == 1.0
        assert fn(3.5) == 0.5
        assert fn(4) == 0.5
        assert fn(7.5) == 0.25
        assert fn(10) == 0.0

    def test_single_part_reduces_to_compile_single(self):
        for lab in ALL_LABELS:
            joint = combine([(lab, 3)], (0, 10), MIN)
            single = compile_single(lab, 3, (0, 10), MIN)
            assert joint == single

    def test_two_rising_expectations(self):
        # hand-applied score setting and midpoint split:
        # G [0,100] 0->0.5, E plateau 0.5 on [100,150], G 0.5->1 on
        # [150,200], E plateau 1 on [200,400]
        fn = combine([(label("GE"), 100), (label("GE"), 200)], (0, 400), MAX)
        expected = {
            0: 0.0,
            50: 0.25,
            100: 0.5,
            125: 0.5,
            150: 0.5,
            175: 0.75,
            200: 1.0,
            300: 1.0,
            400: 1.0,
        }
        for v, s in expected.items():
            assert fn(v) == pytest.approx(s, abs=1e-12)
        samples = [fn(v / 10) for v in range(0, 4001)]
        assert all(b >= a - 1e-12 for a, b in zip(samples, samples[1:]))

    def test_duplicate_parts_collapse(self):
        joint = combine([(label("ES"), 2), (label("ES"), 2)], (0, 10), MIN)
        assert joint == compile_single(label("ES"), 2, (0, 10), MIN)

    def test_out_of_bounds_part(self):
        with pytest.raises(ExpectationOutOfBounds):
            combine([(label("ES"), 2), (label("ES"), 50)], (0, 10), MIN)

    def test_part_count_limits(self):
        with pytest.raises(ValueError):
            combine([], (0, 10), MIN)
        with pytest.raises(ValueError):
            combine([(label("ES"), v) for v in (1, 2, 3)], (0, 10), MIN)


class TestEvaluate:
    def test_out_of_bounds_clamps(self):
        fn = compile_single(label("ES"), 2, (0, 10), MIN)
        assert evaluate(fn, -5) == 1.0
        assert evaluate(fn, 99) == 0.0

    def test_scores_bounded_and_shaped(self):
        # per-segment: flat for E, non-increasing for S, non-decreasing for G
        directions = (MIN, MAX)
        for lab, direction in itertools.product(ALL_LABELS, directions):
            fn = compile_single(lab, 4, (0, 10), direction)
            kinds = [lab.left, lab.right]
            for kind, seg in zip(kinds, fn.segments):
                values = [
                    seg.value_at(seg.v_lo + (seg.v_hi - seg.v_lo) * i / 99)
                    for i in range(100)
                ]
                assert all(0.0 <= v <= 1.0 for v in values)
                pairs = zip(values, values[1:])
                if kind is E:
                    assert all(a == b for a, b in pairs)
                elif kind is S:
                    assert all(b <= a + 1e-12 for a, b in pairs)
                else:
                    assert all(b >= a - 1e-12 for a, b in pairs)


class TestSerialization:
    def test_json_shape_and_field_order(self):
        fn = compile_single(label("ES"), 2, (0, 10), MIN)
        payload = json.loads(fn.to_json())
        assert payload["direction"] == "min"
        assert [list(seg.keys()) for seg in payload["segments"]] == [
            ["v_lo", "v_hi", "s_lo", "s_hi"]
        ] * len(payload["segments"])
        assert payload["segments"][0] == {"v_lo": 0, "v_hi": 2, "s_lo": 1.0, "s_hi": 1.0}

    def test_serialization_deterministic(self):
        parts = [(label("ES"), 2), (label("ES"), 5)]
        assert (
            combine(parts, (0, 10), MIN).to_json()
            == combine(parts, (0, 10), MIN).to_json()
        )

    def test_full_float_precision(self):
        fn = compile_single(label("ES"), 1 / 3, (0, 1), MIN)
        payload = json.loads(fn.to_json())
        assert payload["segments"][0]["v_hi"] == 1 / 3
