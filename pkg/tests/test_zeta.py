import json
import math
from fractions import Fraction

import pytest
from _oracles import character_oracle_gaussian

from cyclofree.zeta import (
    Interval,
    dedekind_zeta,
    density_constant,
    entropy_constant,
    log2_interval,
    log_interval,
)


class TestEnclosures:
    def test_lower_at_least_one_and_ordered(self):
        for n, k in ((4, 2), (3, 2), (12, 2), (5, 3)):
            z = dedekind_zeta(n, k, 5000)
            assert 1 <= z.lower <= z.upper

    def test_nesting_as_bound_grows(self):
        for n in (3, 4):
            for k in (2, 3):
                coarse = dedekind_zeta(n, k, 10**4)
                fine = dedekind_zeta(n, k, 10**5)
                assert coarse.interval.contains_interval(fine.interval)
                assert fine.width < coarse.width

    def test_character_oracle_for_gaussian_field(self):
        for k in (2, 3, 4):
            z = dedekind_zeta(4, k, 10**5)
            lo, hi = character_oracle_gaussian(k)
            # both enclose the true value, so they must overlap, and the
            # oracle midpoint sits within one enclosure width of ours
            assert Fraction(lo) <= z.upper and z.lower <= Fraction(hi)
            mid_gap = abs((lo + hi) / 2 - float(z.interval.midpoint))
            assert mid_gap <= float(z.width)

    def test_character_product_for_degree_four_field(self):
        # conductor 5: the zeta value factors over the four Dirichlet
        # characters mod 5; the non-principal L values are summed directly
        # (absolutely convergent at 2) and multiplied with the Riemann factor
        import cmath

        log_table = {2: 1, 4: 2, 3: 3, 1: 0}

        def chi(m, power):
            return cmath.exp(2j * cmath.pi * power * log_table[m % 5] / 4)

        terms = 200_000
        product = 1.0 + 0j
        for power in (1, 2, 3):
            product *= sum(chi(m, power) / m**2 for m in range(1, terms) if m % 5)
        riemann = math.fsum(m ** -2.0 for m in range(1, terms))
        low = product.real * riemann
        high = product.real * (riemann + 1 / terms)
        pad = 1e-4  # generous cover for the truncated complex L sums
        z = dedekind_zeta(5, 2, 10**5)
        assert low - pad <= float(z.upper) and float(z.lower) <= high + pad
        assert abs((low + high) / 2 - float(z.interval.midpoint)) < float(z.width) + pad

    def test_large_k_tends_to_one(self):
        z = dedekind_zeta(4, 50, 1000)
        assert z.upper - 1 < Fraction(1, 10**10)

    def test_decreasing_in_k(self):
        z2 = dedekind_zeta(4, 2, 10**4)
        z3 = dedekind_zeta(4, 3, 10**4)
        assert z3.interval.strictly_below(z2.interval)

    def test_log_bounds_bracket_float_log(self):
        z = dedekind_zeta(4, 2, 10**4)
        assert float(z.log_lower) <= math.log(float(z.interval.midpoint)) <= float(z.log_upper)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            dedekind_zeta(4, 1, 1000)
        with pytest.raises(ValueError):
            dedekind_zeta(4, 2, 3)  # far below the rigorous-tail threshold

    def test_json_output_parses_and_orders(self):
        z = dedekind_zeta(4, 2, 10**4)
        doc = json.loads(z.to_json())
        assert float(doc["lower"]) <= float(doc["upper"])
        assert doc["precision_bits"] == 192
        assert "rounding" in doc


class TestDensityConstant:
    def test_interval_in_unit_range(self):
        for n, k in ((4, 2), (3, 2), (5, 2), (12, 3)):
            dens = density_constant(n, k, 10**4)
            assert Fraction(0) < dens.lower <= dens.upper < Fraction(1)

    def test_product_with_zeta_contains_one(self):
        z = dedekind_zeta(4, 2, 10**4)
        dens = density_constant(4, 2, 10**4)
        product = dens * z.interval
        assert Fraction(1) in product

    def test_nested_widths(self):
        a = density_constant(4, 2, 10**4)
        b = density_constant(4, 2, 10**5)
        assert a.lower <= b.lower and b.upper <= a.upper


class TestEntropyConstant:
    def test_below_log_two(self):
        log2 = log2_interval()
        for n, k in ((4, 2), (3, 2), (4, 3)):
            ent = entropy_constant(n, k, 10**4)
            assert ent.upper < log2.lower

    def test_strictly_increasing_in_k(self):
        values = [entropy_constant(4, k, 10**4) for k in (2, 3, 4)]
        assert values[0].strictly_below(values[1])
        assert values[1].strictly_below(values[2])

    def test_gaussian_and_eisenstein_systems_distinguished(self):
        gauss = entropy_constant(4, 2, 10**4)
        eisen = entropy_constant(3, 2, 10**4)
        assert gauss.strictly_below(eisen) or eisen.strictly_below(gauss)


class TestIntervalHelpers:
    def test_reciprocal_and_multiplication(self):
        iv = Interval(Fraction(2), Fraction(3))
        rec = iv.reciprocal()
        assert rec.lower == Fraction(1, 3) and rec.upper == Fraction(1, 2)
        prod = iv * Interval(Fraction(1, 2), Fraction(1))
        assert prod.lower == Fraction(1) and prod.upper == Fraction(3)

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            Interval(Fraction(2), Fraction(1))

    def test_log_interval_brackets_known_value(self):
        iv = log_interval(Interval(Fraction(2), Fraction(2)))
        assert float(iv.lower) <= math.log(2) <= float(iv.upper)
        assert iv.upper - iv.lower < Fraction(1, 10**50)
