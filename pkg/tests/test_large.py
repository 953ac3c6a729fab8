"""Large component counts over region ranges."""

import itertools

import pytest

from crosscap.components import profile
from crosscap.coords import DynnikovCoordinates, TriangleCoordinates
from crosscap.errors import InvalidRangeError
from crosscap.inversion import invert, realizable
from crosscap.large import (
    RegionRange,
    counts_for_range,
    crosscap_over_under,
    large_left,
    large_over_under,
    large_right,
)
from crosscap.oracle import build_diagram, large_census

EX1 = profile(TriangleCoordinates(n=2, alpha=(1, 5), beta=(6, 4, 4), gamma=4, c1=2, c2=0))
EX2 = profile(TriangleCoordinates(n=2, alpha=(3, 1), beta=(4, 2, 2), gamma=4, c1=1, c2=1))


class TestOverUnder:
    def test_worked_example_crosscap_range(self):
        assert crosscap_over_under(EX1, 1) == (0, 2)

    def test_final_example_crosscap_range(self):
        # min(A_1, A') = min(2, 1) = 1, min(B_1, B') = min(0, 0) = 0
        assert crosscap_over_under(EX2, 1) == (1, 0)

    def test_left_index_zero_is_empty(self):
        assert large_over_under(EX1, 0, 1) == (0, 0)
        assert crosscap_over_under(EX2, 0) == (0, 0)

    def test_single_region(self):
        assert large_over_under(EX2, 1, 1) == (2, 0)

    def test_range_errors(self):
        with pytest.raises(InvalidRangeError):
            large_over_under(EX1, 1, 5)
        with pytest.raises(InvalidRangeError):
            RegionRange.punctures(2, 1)
        with pytest.raises(InvalidRangeError):
            RegionRange(l=-1)


class TestRightLoops:
    def test_final_example_both_crosscap_ranges(self):
        assert large_right(EX2, RegionRange.through_second(1)) == 0
        assert large_right(EX2, RegionRange.through_second(2)) == 0

    def test_s0_has_no_right_loops(self):
        assert large_right(EX1, RegionRange.punctures(0, 1)) == 0
        assert large_right(EX2, RegionRange.through_second(0)) == 0

    def test_single_region_right_loops_are_large(self):
        # empty minimum on the left leaves only the loop-count cap
        assert large_right(EX1, RegionRange.punctures(1, 1)) == 1

    def test_noncore_cap_at_first_crosscap(self):
        # EX1 has straight cores, hence no right non-core loops at all
        assert large_right(EX1, RegionRange.through_first(1)) == 0


class TestLeftLoops:
    def test_worked_example_boundary_form(self):
        # min(A_1, B_1, beta_1/2) = min(0, 4, 3)
        assert large_left(EX1, RegionRange.punctures(0, 1)) == 0

    def test_positive_b_blocks_left_loops(self):
        assert large_left(EX2, RegionRange.through_first(1)) == 0

    def test_no_left_loops_in_second_crosscap_range(self):
        assert large_left(EX2, RegionRange.through_second(1)) == 0

    def test_single_region_left_loops_are_large(self):
        p = profile(invert(DynnikovCoordinates(n=2, a=(0,), b=(-2, 0), t=0, c1=0, c2=0)))
        assert large_left(p, RegionRange.punctures(1, 1)) == 2


class TestBundle:
    def test_counts_for_range_shapes(self):
        c = counts_for_range(EX2, RegionRange.through_first(1))
        assert (c.over, c.under, c.right_loops, c.left_loops) == (1, 0, 0, 0)
        c2 = counts_for_range(EX2, RegionRange.through_second(1))
        assert c2.over is None and c2.under is None and c2.left_loops is None
        assert c2.right_loops == 0


def _grid(n, bound):
    dims = (n - 1) + n + 1
    for point in itertools.product(
        *([range(-bound, bound + 1)] * dims + [range(0, bound + 1)] * 2)
    ):
        if not any(point):
            continue
        v = DynnikovCoordinates(
            n=n,
            a=point[: n - 1],
            b=point[n - 1 : 2 * n - 1],
            t=point[2 * n - 1],
            c1=point[2 * n],
            c2=point[2 * n + 1],
        )
        if realizable(v):
            yield v


class TestAgainstTracing:
    def test_census_equivalence_small_grid(self):
        # every min-formula equals the strand-traced census, all ranges
        for v in _grid(2, 2):
            p = profile(invert(v))
            dg = build_diagram(p)
            for rng in (
                RegionRange.punctures(0, 1),
                RegionRange.punctures(1, 1),
                RegionRange.through_first(0),
                RegionRange.through_first(1),
                RegionRange.through_first(2),
                RegionRange.through_second(0),
                RegionRange.through_second(1),
                RegionRange.through_second(2),
            ):
                over, under, right, left = large_census(dg, rng)
                bundle = counts_for_range(p, rng)
                if bundle.over is not None:
                    assert (over, under) == (bundle.over, bundle.under), (v, rng)
                    assert left == bundle.left_loops, (v, rng)
                assert right == bundle.right_loops, (v, rng)

    def test_monotone_shrinkage(self):
        for v in itertools.islice(_grid(3, 2), 0, 20000, 37):
            p = profile(invert(v))
            a11, b11 = large_over_under(p, 1, 1)
            a12, b12 = large_over_under(p, 1, 2)
            assert a12 <= a11 and b12 <= b11
            over, under = crosscap_over_under(p, 1)
            assert over <= a12 and under <= b12

    def test_loop_caps(self):
        for v in itertools.islice(_grid(3, 2), 0, 20000, 53):
            p = profile(invert(v))
            b = invert(v).half_differences()
            for l, m in ((1, 1), (1, 2), (2, 2)):
                r = large_right(p, RegionRange.punctures(l, m))
                assert 0 <= r <= max(b[m - 1], 0)
                lf = large_left(p, RegionRange.punctures(l, m))
                assert 0 <= lf <= max(-b[l - 1], 0)
