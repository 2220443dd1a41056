"""Ideal-family conditions (Oka, Ako) and the Prime Ideal Principle
consequence: maximal elements outside a verified family must be prime."""

import pytest

from ringua import (
    RinguaError,
    check_ako_family,
    check_oka_family,
    enumerate_one_sided_ideals,
    make_cyclic_ring,
    members_to_mask,
    principal_ideal_family,
)


class TestOkaFamily:
    def test_principal_family_on_local_ring(self, f2xy):
        family = principal_ideal_family(f2xy)
        report = check_oka_family(f2xy, family)
        assert report.holds and not report.violations
        # the unique non-principal ideal is the maximal one, and it is prime
        assert report.complement_maximal == (members_to_mask([0, 2, 4, 6]),)
        assert report.pip_ok and not report.pip_failures

    def test_all_ideals_family_vacuous(self, z6):
        report = check_oka_family(z6, lambda mask: True)
        assert report.holds
        assert report.complement_maximal == ()
        assert report.pip_ok

    def test_whole_ring_only_family_on_z4(self, z4):
        report = check_oka_family(z4, {z4.full_mask})
        assert report.holds
        # complement {(0), (2)} has the unique maximal element (2), a prime
        assert report.complement_maximal == (members_to_mask([0, 2]),)
        assert report.pip_ok

    def test_family_must_contain_ring(self, z4):
        with pytest.raises(RinguaError):
            check_oka_family(z4, {1 << 0})

    def test_noncommutative_rejected(self, m2f2):
        with pytest.raises(RinguaError):
            check_oka_family(m2f2, lambda mask: True)

    def test_predicate_and_collection_agree(self, z8):
        family = principal_ideal_family(z8)
        by_set = check_oka_family(z8, family)
        by_pred = check_oka_family(z8, lambda m: m in family)
        assert by_set == by_pred

    def test_violating_family_reported(self, z8):
        # {R, (2)} is not Oka: for I = (4), a = 2 we get (I,2) = (2) and
        # (I:2) = (2), both in the family, yet (4) is outside it.
        two = members_to_mask([0, 2, 4, 6])
        four = members_to_mask([0, 4])
        report = check_oka_family(z8, {z8.full_mask, two})
        assert not report.holds
        assert any(v[0] == four and v[1] == 2 for v in report.violations)
        assert report.pip_ok is None


class TestAkoFamily:
    def test_principal_family_on_z6(self, z6):
        report = check_ako_family(z6, principal_ideal_family(z6))
        assert report.condition == "ako"
        assert report.holds  # every ideal of Z/6 is principal
        assert report.pip_ok

    def test_whole_ring_only_family_on_z4(self, z4):
        report = check_ako_family(z4, {z4.full_mask})
        assert report.holds
        assert report.complement_maximal == (members_to_mask([0, 2]),)
        assert report.pip_ok

    def test_pip_on_local_ring(self, f2xy):
        report = check_ako_family(f2xy, principal_ideal_family(f2xy))
        if report.holds:
            assert report.pip_ok

    def test_family_must_contain_ring(self, z6):
        with pytest.raises(RinguaError):
            check_ako_family(z6, {1 << 0})


class TestPrincipalFamily:
    def test_members_are_principal(self, z8, f2xy):
        from ringua import principal_ideal

        for ring in (z8, f2xy):
            family = principal_ideal_family(ring)
            assert family == {principal_ideal(ring, a, "right") for a in range(ring.size)}
            ideals = set(enumerate_one_sided_ideals(ring, "two-sided"))
            assert family <= ideals

    def test_f2xy_maximal_not_principal(self, f2xy):
        assert members_to_mask([0, 2, 4, 6]) not in principal_ideal_family(f2xy)
