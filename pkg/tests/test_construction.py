from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unary_dissect.construction import (
    Params,
    contiguous_levels_from,
    floor_log_ratio,
    growth_cutoff,
    in_index_set,
    level_admitted,
    level_divisor,
    next_index,
    stabilization_threshold,
    suggest_params,
    word_length,
)

from oracles import brute_floor_log, brute_index_set, brute_length

P12 = Params(1, 2)
P23 = Params(2, 3)

params_strategy = st.integers(1, 12).flatmap(
    lambda a: st.integers(a + 1, 20).map(lambda b: Params(a, b))
)


class TestParams:
    def test_rejects_alpha_zero(self):
        with pytest.raises(ValueError):
            Params(0, 2)

    def test_rejects_beta_not_above_alpha(self):
        with pytest.raises(ValueError):
            Params(2, 2)
        with pytest.raises(ValueError):
            Params(2, 1)

    def test_ratio_and_json(self):
        assert P23.ratio == Fraction(3, 2)
        assert P23.to_json() == {"alpha": 2, "beta": 3}


class TestFloorLogRatio:
    def test_log_of_one_is_zero(self):
        assert floor_log_ratio(P12, 1) == 0

    def test_power_of_two(self):
        # oracle: 2**10 <= 1024 < 2**11
        assert brute_floor_log(1, 2, 1024) == 10
        assert floor_log_ratio(P12, 1024) == 10

    def test_ratio_base(self):
        assert brute_floor_log(2, 3, 14) == 6
        assert floor_log_ratio(P23, 14) == 6

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            floor_log_ratio(P12, 0)

    def test_exact_at_powers(self):
        # boundary n = (beta/alpha)**k must land on k, not k - 1
        for k in range(1, 40):
            assert floor_log_ratio(P12, 2 ** k) == k
            assert floor_log_ratio(P12, 2 ** k - 1) == k - 1

    @given(params_strategy, st.integers(1, 5000))
    def test_definition_inequalities(self, p, n):
        k = floor_log_ratio(p, n)
        assert p.beta ** k <= n * p.alpha ** k
        assert p.beta ** (k + 1) > n * p.alpha ** (k + 1)

    def test_exhaustive_against_incremental_scan(self):
        # walk n upward keeping the floor log incrementally; cheap enough to
        # cover a wide range for a couple of parameter pairs
        for p in (P12, Params(19, 20)):
            k = 0
            hi_pow = (p.beta ** (k + 1), p.alpha ** (k + 1))
            for n in range(1, 100_001):
                while hi_pow[0] <= n * hi_pow[1]:
                    k += 1
                    hi_pow = (p.beta ** (k + 1), p.alpha ** (k + 1))
                assert floor_log_ratio(p, n) == k, (p, n)


class TestIndexSet:
    def test_examples(self):
        assert in_index_set(P12, 3, 8) is True  # depth 3, 8 > 3
        assert in_index_set(P23, 1, 6) is False  # depth 4, 6 <= 8
        assert in_index_set(P12, 0, 1) is True

    def test_total_outside_domain(self):
        assert in_index_set(P12, 0, 0) is False
        assert in_index_set(P12, -1, 3) is False

    def test_depth_boundary(self):
        assert in_index_set(P12, 2, 4) is True
        assert in_index_set(P12, 3, 4) is False

    def test_level_gaps_for_alpha_ge_2(self):
        admitted = [n for n in range(1, 31) if level_admitted(P23, n)]
        assert admitted == [1, 11] + list(range(13, 31))

    @given(params_strategy, st.integers(1, 400))
    def test_matches_oracle(self, p, n):
        depth = brute_floor_log(p.alpha, p.beta, n)
        for j in (0, depth, depth + 1):
            expected = n > p.alpha * depth and j <= depth
            assert in_index_set(p, j, n) == expected


class TestWordLength:
    def test_unit(self):
        assert word_length(P12, 0, 1) == 1

    def test_hand_value(self):
        # 2**2 * 4! = 96
        assert brute_length(1, 2, 2, 4) == 96
        assert word_length(P12, 2, 4) == 96

    def test_big_value(self):
        # (3/2) * 14!
        assert brute_length(2, 3, 1, 14) == 130767436800
        assert word_length(P23, 1, 14) == 130767436800

    def test_rejects_inadmissible_index(self):
        with pytest.raises(ValueError):
            word_length(P12, 4, 8)
        with pytest.raises(ValueError):
            word_length(P23, 0, 6)

    @given(params_strategy, st.integers(1, 60), st.data())
    def test_divisible_by_level_divisor(self, p, n, data):
        if not level_admitted(p, n):
            return
        j = data.draw(st.integers(0, floor_log_ratio(p, n)))
        assert word_length(p, j, n) % level_divisor(p, n) == 0


class TestLevelDivisor:
    def test_values(self):
        assert level_divisor(P12, 1) == 1
        assert level_divisor(P12, 4) == 4
        assert level_divisor(P12, 5) == 20

    def test_rejects_gap_level(self):
        with pytest.raises(ValueError):
            level_divisor(P23, 6)


class TestNextIndex:
    def test_within_level(self):
        assert next_index(P12, 1, 4) == (2, 4)

    def test_level_step(self):
        assert next_index(P12, 2, 4) == (0, 5)

    def test_level_step_other_base(self):
        assert next_index(P23, 6, 14) == (0, 15)

    def test_scans_over_gaps(self):
        assert next_index(P23, 0, 1) == (0, 11)
        assert next_index(P23, 5, 11) == (0, 13)

    def test_rejects_inadmissible(self):
        with pytest.raises(ValueError):
            next_index(P23, 0, 2)

    def test_walk_covers_index_set_in_order(self):
        want = brute_index_set(2, 3, 20)
        got = []
        j, n = 0, 1
        while len(got) < len(want):
            got.append((j, n))
            j, n = next_index(P23, j, n)
        assert got == want


class TestGrowthCutoff:
    @pytest.mark.parametrize(
        "p,c,expected",
        [
            (P23, Fraction(2), 4),
            (P12, Fraction(3), 3),
            (P12, Fraction(5, 2), 5),
        ],
    )
    def test_examples(self, p, c, expected):
        assert growth_cutoff(p, c) == expected

    def test_minimality(self):
        for p, c in [(P23, Fraction(2)), (P12, Fraction(3)), (Params(3, 4), Fraction(3, 2))]:
            n0 = growth_cutoff(p, c)

            def holds(n):
                return Fraction((n + 1) * p.beta, n * p.alpha) < c

            assert holds(n0)
            assert n0 == 1 or not holds(n0 - 1)

    def test_rejects_c_at_or_below_ratio(self):
        with pytest.raises(ValueError):
            growth_cutoff(P23, Fraction(3, 2))
        with pytest.raises(ValueError):
            growth_cutoff(P23, Fraction(1))


class TestStabilizationThreshold:
    def test_small_cases(self):
        n = stabilization_threshold(P12, 2)
        assert n <= 6
        assert n - floor_log_ratio(P12, n) > 2
        assert stabilization_threshold(P12, 5) <= 10

    def test_rejects_r_below_one(self):
        with pytest.raises(ValueError):
            stabilization_threshold(P12, 0)

    @pytest.mark.parametrize("p", [P12, P23, Params(3, 4), Params(2, 5)])
    @pytest.mark.parametrize("r", [1, 2, 5, 12])
    def test_margin_holds_for_all_larger_levels(self, p, r):
        # oracle: brute margin scan well past the threshold
        n = stabilization_threshold(p, r)
        k = brute_floor_log(p.alpha, p.beta, n)
        for m in range(n, n + 10_000):
            while p.beta ** (k + 1) <= m * p.alpha ** (k + 1):
                k += 1
            assert m - p.alpha * k > r, (p, r, m)


class TestContiguousLevels:
    @pytest.mark.parametrize(
        "p,expected",
        [(P12, 1), (P23, 13), (Params(3, 4), 37), (Params(2, 5), 1)],
    )
    def test_values(self, p, expected):
        assert contiguous_levels_from(p) == expected

    @pytest.mark.parametrize("p", [P12, P23, Params(3, 4), Params(2, 5), Params(4, 5)])
    def test_boundary_is_tight(self, p):
        m = contiguous_levels_from(p)
        assert all(level_admitted(p, n) for n in range(m, m + 2000))
        if m > 1:
            assert not level_admitted(p, m - 1)


class TestSuggestParams:
    @pytest.mark.parametrize(
        "c,expected",
        [
            (Fraction(3, 2), Params(3, 4)),
            (Fraction(2), Params(2, 3)),
            (Fraction(101, 100), Params(101, 102)),
        ],
    )
    def test_examples(self, c, expected):
        assert suggest_params(c) == expected

    def test_rejects_c_at_or_below_one(self):
        with pytest.raises(ValueError):
            suggest_params(Fraction(1))
        with pytest.raises(ValueError):
            suggest_params(Fraction(99, 100))

    @given(st.fractions(min_value=Fraction(101, 100), max_value=Fraction(10)))
    def test_ratio_strictly_between_one_and_c(self, c):
        p = suggest_params(c)
        assert 1 < p.ratio < c
