import cmath
import json
import random

import pytest

from cyclofree.cyclotomic import CycInt, euler_phi, ring_degree
from cyclofree.prime_ideals import is_in_Wk, split_prime
from cyclofree.symmetries import (
    AqCandidate,
    AqNotFound,
    aq_search,
    galois_group,
    generator_elements,
    identity_element,
    scan_for_violation,
    splitting_primes,
    symmetry_element,
    unit_generators,
    vanishing_four_sums,
    verify_Wk_preservation,
    verify_coprimality_transport,
    verify_lemma_factors,
    verify_stabiliser_action,
)
from cyclofree.lattices import determinant

CONDUCTORS = [3, 4, 5, 8, 12]


class TestGaloisGroup:
    def test_conductor_four(self):
        group = galois_group(4)
        assert group.elements == (1, 3)
        assert group.order == 2

    def test_conductor_twelve_is_klein_four(self):
        group = galois_group(12)
        assert group.order == 4
        for r in group.elements:
            assert group.multiply(r, r) == 1

    def test_order_is_totient(self):
        for n in range(3, 101):
            if n % 4 == 2:
                continue
            assert galois_group(n).order == euler_phi(n)

    def test_closure_and_crt(self):
        group = galois_group(12)
        assert group.is_closed()
        assert group.crt_factors == ((2, 2, 2), (3, 1, 2))


class TestUnitGenerators:
    def test_gaussian_units_are_roots_of_unity_only(self):
        gens = unit_generators(4)
        assert [g.coeffs for g in gens] == [(-1, 0), (0, 1)]

    def test_composite_conductor_includes_one_minus_root(self):
        gens = unit_generators(12)
        u = CycInt.one(12) - CycInt.root(12)
        assert u in gens
        assert abs(u.norm()) == 1

    def test_prime_conductor_includes_cyclotomic_unit(self):
        gens = unit_generators(5)
        assert CycInt(5, (1, 1, 0, 0)) in gens  # 1 + zeta_5

    def test_every_generator_is_a_unit(self):
        for n in CONDUCTORS + [15, 16, 20]:
            for u in unit_generators(n):
                assert abs(u.norm()) == 1


class TestSymmetryElements:
    def test_identity_matrix(self):
        el = identity_element(5)
        assert el.matrix == tuple(
            tuple(1 if i == j else 0 for j in range(4)) for i in range(4)
        )

    def test_multiplication_by_i_is_rotation(self):
        el = symmetry_element(CycInt.root(4), 1)
        assert el.matrix == ((0, -1), (1, 0))

    def test_matrix_realizes_the_map_on_random_points(self):
        rng = random.Random(2)
        for n in CONDUCTORS:
            d = ring_degree(n)
            for el in generator_elements(n):
                p = tuple(rng.randrange(-9, 10) for _ in range(d))
                x = CycInt.unembed(n, p)
                assert el.apply(p) == el.apply_element(x).embed()

    def test_determinants_are_unimodular(self):
        for n in CONDUCTORS:
            for el in generator_elements(n):
                assert abs(determinant(el.matrix)) == 1

    def test_semidirect_group_law(self):
        rng = random.Random(5)
        for n in CONDUCTORS:
            gens = generator_elements(n)
            for _ in range(10):
                e1, e2 = rng.choice(gens), rng.choice(gens)
                composed = e1.compose(e2)
                d = e1.d
                product = tuple(
                    tuple(sum(e1.matrix[i][t] * e2.matrix[t][j] for t in range(d)) for j in range(d))
                    for i in range(d)
                )
                assert composed.matrix == product
                assert composed.unit == e1.unit * e2.unit.galois(e1.r)
                assert composed.r == (e1.r * e2.r) % n

    def test_inverse_composes_to_identity(self):
        for n in CONDUCTORS:
            for el in generator_elements(n):
                assert el.compose(el.inverse()).matrix == identity_element(n).matrix

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            symmetry_element(CycInt.from_int(4, 2), 1)


class TestStabiliserAction:
    def test_identity_passes_trivially(self):
        report = verify_stabiliser_action(identity_element(4), 2, 10, sample_size=50)
        assert report.passed and report.checked == 100

    def test_gaussian_rotation_with_conjugation(self):
        element = symmetry_element(CycInt.root(4), 3)
        report = verify_stabiliser_action(element, 2, 25, sample_size=300)
        assert report.passed

    def test_shear_is_not_a_stabiliser(self):
        witness = scan_for_violation(((1, 1), (0, 1)), 4, 2, radius_cap=10)
        assert witness is not None
        x = CycInt.unembed(4, witness)
        from cyclofree.prime_ideals import is_kfree

        assert is_kfree(x, 2)
        image = (witness[0] + witness[1], witness[1])
        assert not is_kfree(CycInt.unembed(4, image), 2)

    def test_stabiliser_matrix_has_no_violation_scan(self):
        el = symmetry_element(CycInt.root(4), 1)
        assert scan_for_violation(el.matrix, 4, 2, radius_cap=6) is None

    def test_report_json(self):
        report = verify_stabiliser_action(identity_element(4), 2, 5, sample_size=10)
        doc = json.loads(report.to_json())
        assert doc["failures"] == [] and doc["checked"] == report.checked


class TestWkPreservation:
    def test_roots_of_unity_stay_in_Wk(self):
        el = symmetry_element(CycInt.root(4), 3)
        for t in range(4):
            image = el.apply_element(CycInt.root(4, t))
            assert is_in_Wk(image, 2)

    def test_one_plus_i_maps_inside_W2(self):
        el = symmetry_element(CycInt.root(4), 3)
        image = el.apply_element(CycInt(4, (1, 1)))
        assert is_in_Wk(image, 2)

    def test_box_enumeration_report(self):
        el = symmetry_element(CycInt.root(4), 3)
        report = verify_Wk_preservation(el, 2, norm_bound=100, search_radius=4)
        assert report.passed
        assert report.checked >= 8  # units and the ramified generators

    def test_infinite_order_unit_preserves_Wk(self):
        # 1 - zeta_12 has infinite multiplicative order; multiplication by it
        # permutes W_2 all the same
        el = symmetry_element(CycInt.one(12) - CycInt.root(12), 5)
        report = verify_Wk_preservation(el, 2, norm_bound=200, search_radius=2)
        assert report.passed and report.checked > 0

    def test_coprimality_transport(self):
        el = symmetry_element(CycInt.root(4), 3)
        report = verify_coprimality_transport(el, 2, prime_bound=50, r_box=8, sample_size=20)
        assert report.passed and report.checked > 0


class TestSplittingPrimes:
    def test_twelve_up_to_hundred(self):
        assert splitting_primes(12, 100).primes == (13, 37, 61, 73, 97)

    def test_four_gives_one_mod_four(self):
        got = splitting_primes(4, 60).primes
        assert got == (5, 13, 17, 29, 37, 41, 53)
        assert all(p % 4 == 1 for p in got)

    def test_members_split_completely(self):
        for ell in splitting_primes(12, 100).primes:
            ideals = split_prime(ell, 12)
            assert len(ideals) == euler_phi(12)
            assert all(P.f == 1 and P.e == 1 for P in ideals)

    def test_trivial_modulus(self):
        assert splitting_primes(1, 10).primes == (2, 3, 5, 7)


class TestAqSearch:
    def test_h2_alone(self):
        # 6 is divisible by both primes of 12
        assert all(6 % p == 0 for p in (2, 3))

    def test_h1_rejects_proper_subgroup_orders(self):
        # ord(1 mod 25) = 1, so a = 1 can never satisfy (H1) for n = 4, q = 5;
        # a = 7 has 7^2 = 49 = -1 mod 25, order 4 < 20, also rejected
        from cyclofree.symmetries import _check_h1

        assert not _check_h1(1, 4, 5)
        assert not _check_h1(7, 4, 5)
        assert _check_h1(2, 4, 5)

    def test_search_finds_least_candidate(self):
        cand = aq_search(4, 5, ell_bound=100, a_bound=1000)
        assert cand.a == 2
        # independent re-derivation of the three hypotheses
        from cyclofree.arith import multiplicative_order, primes_up_to

        assert multiplicative_order(cand.a, 25) == 20
        assert cand.a % 2 == 0
        for ell in primes_up_to(100):
            if ell != 5 and ell % 4 == 1:
                assert pow(cand.a, 4, ell * ell) != 1

    def test_validate_and_json_roundtrip(self):
        cand = aq_search(12, 13, ell_bound=500, a_bound=10**4)
        assert cand.validate()
        again = AqCandidate.from_json(cand.to_json())
        assert again == cand
        tampered = json.dumps({"n": 12, "q": 13, "a": cand.a + 1, "ell_bound": 500})
        with pytest.raises(ValueError):
            AqCandidate.from_json(tampered)

    def test_not_found_reports_range(self):
        with pytest.raises(AqNotFound, match=r"\[1, 4\]"):
            aq_search(12, 13, ell_bound=100, a_bound=4)

    def test_invalid_q_rejected(self):
        with pytest.raises(ValueError):
            aq_search(12, 11, ell_bound=100, a_bound=100)


@pytest.fixture(scope="module")
def candidate():
    return aq_search(12, 13, ell_bound=2000, a_bound=10**5)


class TestLemmaFactors:

    def test_all_assertions_for_small_divisor(self, candidate):
        report = verify_lemma_factors(candidate, 3, 1)
        assert report.complete and report.passed
        assert all(ell % 3 == 1 for ell in report.prime_factors)

    def test_conductor_m_equals_n(self, candidate):
        report = verify_lemma_factors(candidate, 12, 5)
        assert report.passed

    def test_element_is_never_a_unit(self, candidate):
        # a unit would sit inside W_2 and fail the outside_W2 assertion
        report = verify_lemma_factors(candidate, 4, 1)
        assert report.norm > 1 and report.outside_W2

    def test_invalid_divisors_rejected(self, candidate):
        with pytest.raises(ValueError):
            verify_lemma_factors(candidate, 5, 1)
        with pytest.raises(ValueError):
            verify_lemma_factors(candidate, 12, 4)


class TestRootsOfOrderTable:
    def test_group_law_including_twice_odd_orders(self):
        from cyclofree.symmetries import _roots_of_order

        for order in (1, 2, 3, 4, 6, 10, 12, 18):
            roots = _roots_of_order(order)
            assert len(roots) == order
            for s in range(order):
                for t in range(order):
                    assert roots[s] * roots[t] == roots[(s + t) % order], (order, s, t)
            # primitivity: no earlier power returns to 1
            if order > 1:
                assert all(roots[t] != roots[0] for t in range(1, order))


class TestVanishingFourSums:
    def test_three_term_relation_not_reported_for_eisenstein(self):
        # 1 + zeta + zeta^2 = 0 is three terms; the four-term enumerator
        # must not smuggle it in via a repeated exponent
        report = vanishing_four_sums(3)
        assert report.solutions == []
        assert report.all_divide_six

    def test_no_survivors_for_small_conductors(self):
        for n in (1, 2, 4, 5, 7, 9):
            report = vanishing_four_sums(n)
            assert report.all_divide_six
            assert report.solutions == []

    def test_agrees_with_complex_float_oracle(self):
        for n in (8, 12):
            zeta = cmath.exp(2j * cmath.pi / n)
            float_zeros = set()
            for s1 in (1, -1):
                for s2 in (1, -1):
                    for s3 in (1, -1):
                        for i in range(n):
                            for j in range(i, n):
                                for k in range(j, n):
                                    value = 1 + s1 * zeta**i + s2 * zeta**j + s3 * zeta**k
                                    if abs(value) < 1e-9:
                                        float_zeros.add((s1, s2, s3, i, j, k))
            # every float zero must be an exact zero of the table the
            # enumerator uses, and every reported survivor is a float zero
            from cyclofree.symmetries import _roots_of_order

            roots = _roots_of_order(n)
            for s1, s2, s3, i, j, k in float_zeros:
                total = roots[0] + s1 * roots[i] + s2 * roots[j] + s3 * roots[k]
                assert not total
            report = vanishing_four_sums(n)
            for sol in report.solutions:
                _, s1, s2, s3 = sol.signs
                _, i, j, k = sol.exponents
                value = 1 + s1 * zeta**i + s2 * zeta**j + s3 * zeta**k
                assert abs(value) < 1e-9
                assert sol.divides_six

    def test_divisibility_for_conductors_up_to_thirty(self):
        for n in range(1, 31):
            assert vanishing_four_sums(n).all_divide_six

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            vanishing_four_sums(200)
