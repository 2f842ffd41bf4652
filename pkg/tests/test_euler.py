import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symtoric.errors import DomainError
from symtoric.euler import (
    ChiReport,
    affine_volume,
    bernstein_identity_check,
    chi_affine_space,
    chi_closed_form,
    chi_face_sum,
    chi_linear,
    chi_product_form,
    compute_report,
    elementary_symmetric,
    euler_obstruction,
    euler_obstruction_f,
    euler_obstruction_f_via_milnor,
    milnor_number_brieskorn,
)
from symtoric.newton import DegreeVector
from symtoric.oracle import brute_force_elementary, classical_milnor_g


class TestChiExamples:
    def test_linear_odd(self):
        assert chi_face_sum(3, (1, 1, 1)) == 1

    def test_linear_even(self):
        assert chi_face_sum(2, (1, 1)) == 0

    def test_222(self):
        # 6 - 24 + 32
        assert chi_face_sum(3, (2, 2, 2)) == 14
        assert chi_product_form(3, (2, 2, 2)) == 14

    def test_closed_examples(self):
        assert chi_closed_form(3, (1, 1, 1)) == 1
        assert chi_closed_form(2, (2, 3)) == -7
        assert chi_closed_form(4, (1, 1, 1, 1)) == 0

    def test_product_examples(self):
        assert chi_product_form(3, (1, 1, 1)) == 1
        assert chi_product_form(2, (2, 3)) == -7

    def test_face_sum_23(self):
        # rays 2 + 3, top face 12
        assert chi_face_sum(2, (2, 3)) == -7

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            chi_face_sum(3, (1, 1))

    def test_bad_degree(self):
        with pytest.raises(DomainError):
            chi_closed_form(2, (0, 1))


def test_elementary_symmetric_matches_enumeration():
    rng = random.Random(7)
    for _ in range(50):
        vals = [rng.randint(-5, 10**6) for _ in range(rng.randint(0, 8))]
        e = elementary_symmetric(vals)
        assert e == [brute_force_elementary(vals, k) for k in range(len(vals) + 1)]


@pytest.mark.parametrize("n", range(2, 9))
def test_three_paths_agree(n):
    rng = random.Random(n)
    for _ in range(60):
        d = tuple(rng.randint(1, 9) for _ in range(n))
        assert chi_face_sum(n, d) == chi_closed_form(n, d) == chi_product_form(n, d)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 10**6), min_size=2, max_size=20))
def test_closed_equals_product_big(d):
    n = len(d)
    assert chi_closed_form(n, d) == chi_product_form(n, d)


@pytest.mark.parametrize("n", range(2, 16))
def test_chi_linear_parity(n):
    assert chi_linear(n) == (1 - (-1) ** n) // 2
    assert euler_obstruction(n) == chi_linear(n)


def test_chi_linear_15():
    assert chi_linear(15) == 1


@pytest.mark.parametrize("n", range(1, 31))
def test_bernstein(n):
    assert bernstein_identity_check(n)


def test_bernstein_by_hand():
    # n = 3: -1 + 3*2 - 3*4 + 8 = 1
    assert -1 + comb(3, 1) * 2 - comb(3, 2) * 4 + 8 == 1
    assert bernstein_identity_check(3)


class TestEulerObstruction:
    @pytest.mark.parametrize("n, eu", [(2, 0), (3, 1), (7, 1)])
    def test_variety(self, n, eu):
        assert euler_obstruction(n) == eu

    def test_function(self):
        assert euler_obstruction_f(3, (2, 2, 2)) == -13
        assert euler_obstruction_f(3, (1, 1, 1)) == 0
        assert euler_obstruction_f(2, (1, 1)) == 0

    @pytest.mark.parametrize("n", range(2, 7))
    def test_two_displayed_formulas(self, n):
        rng = random.Random(n)
        for _ in range(20):
            d = tuple(rng.randint(1, 9) for _ in range(n))
            chi = chi_closed_form(n, d)
            expected = 1 - chi if n % 2 else -chi
            assert euler_obstruction_f(n, d) == expected
            assert euler_obstruction_f(n, d) + chi_face_sum(n, d) == euler_obstruction(n)


class TestAffine:
    def test_examples(self):
        assert chi_affine_space(2, (3, 2)) == -5
        assert chi_affine_space(2, (2, 1)) == 0
        assert chi_affine_space(3, (2, 1, 1)) == 2
        assert chi_affine_space(3, (2, 2, 2)) == 10

    def test_volume_rules(self):
        d = DegreeVector((3, 2, 5))
        assert affine_volume((1,), d) == 3
        assert affine_volume((2,), d) == 4
        assert affine_volume((1, 3), d) == 2 * 3 * 5
        assert affine_volume((2, 3), d) == 4 * 2 * 5

    def test_d1_must_be_at_least_two(self):
        with pytest.raises(DomainError):
            chi_affine_space(2, (1, 1))
        with pytest.raises(DomainError):
            milnor_number_brieskorn(2, (1, 3))

    def test_milnor_examples(self):
        assert milnor_number_brieskorn(2, (3, 2)) == 6
        assert milnor_number_brieskorn(2, (2, 1)) == 1
        assert milnor_number_brieskorn(3, (2, 2, 2)) == 9

    def test_milnor_oracle_grid(self):
        for n in range(2, 7):
            for d1 in range(2, 6):
                for rest in itertools.product(range(1, 6), repeat=n - 1) if n <= 4 else [(1,) * (n - 1), (5,) * (n - 1), tuple(range(1, n))]:
                    d = (d1,) + rest
                    assert milnor_number_brieskorn(n, d) == classical_milnor_g(d)

    def test_chi_g_relation(self):
        for d in [(2, 1), (3, 2), (2, 2, 2), (4, 1, 3, 2)]:
            n = len(d)
            assert chi_affine_space(n, d) == 1 + (-1) ** (n - 1) * classical_milnor_g(d)


class TestFinalIdentity:
    @pytest.mark.parametrize("d", [(2, 2, 2), (2, 1), (2, 1, 1), (5, 4, 3, 2), (3, 1, 1, 1, 1)])
    def test_matches_direct(self, d):
        n = len(d)
        assert euler_obstruction_f_via_milnor(n, d) == euler_obstruction_f(n, d)

    def test_values(self):
        assert euler_obstruction_f_via_milnor(2, (2, 1)) == 1
        # e = (4, 5, 2): chi = 4 - 10 + 8 = 2, Eu_f = 1 - 2
        assert chi_face_sum(3, (2, 1, 1)) == 2
        assert euler_obstruction_f_via_milnor(3, (2, 1, 1)) == -1

    @settings(max_examples=150, deadline=None)
    @given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.integers(2, 8), st.lists(st.integers(1, 8), min_size=n - 1, max_size=n - 1))))
    def test_property(self, args):
        d1, rest = args
        d = (d1, *rest)
        assert euler_obstruction_f_via_milnor(len(d), d) == euler_obstruction_f(len(d), d)


class TestReport:
    def test_report_fields(self):
        rep = compute_report(3, (2, 2, 2))
        assert rep.chi_agree and rep.bmps_ok and rep.ok
        assert rep.milnor_g == 9 and rep.chi_affine == 10 and rep.milnor_identity_ok

    def test_no_milnor_when_d1_is_one(self):
        rep = compute_report(3, (1, 1, 1))
        assert rep.milnor_g is None and rep.to_json()["milnor"] is None

    def test_json_roundtrip(self):
        for d in [(2, 2, 2), (1, 4), (3, 1, 2, 2)]:
            rep = compute_report(len(d), d, isolated_critical=False)
            again = ChiReport.from_json(rep.to_json())
            assert again.to_json() == rep.to_json()
            assert again.attestations["isolated_critical"] is False

    def test_schema_version_checked(self):
        data = compute_report(2, (1, 1)).to_json()
        data["schema"] = 2
        with pytest.raises(ValueError):
            ChiReport.from_json(data)
