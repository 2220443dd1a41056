"""Module axiom verification, ideals as modules, and quotient modules."""

import json

import pytest

from conftest import UPPER_ROW_MASK
from ringua import (
    GroupSpec,
    ModuleSpec,
    RinguaError,
    enumerate_one_sided_ideals,
    ideal_as_module,
    members_to_mask,
    module_from_json,
    quotient_right_module,
    regular_module,
    verify_module_axioms,
)


class TestRegularModule:
    def test_right_regular_passes_everywhere(self, fixture_rings):
        for name, ring in fixture_rings.items():
            report = verify_module_axioms(regular_module(ring, "right"))
            assert report.ok, (name, report.failures())

    def test_left_regular_passes_everywhere(self, fixture_rings):
        for name, ring in fixture_rings.items():
            report = verify_module_axioms(regular_module(ring, "left"))
            assert report.ok, (name, report.failures())

    def test_sides_differ_on_noncommutative_rings(self, m2f2):
        # reading the right-regular action as a left module breaks the
        # associativity law linking the action to the ring multiplication
        right = regular_module(m2f2, "right")
        mislabeled = ModuleSpec(right.group, right.ring, right.action, "left")
        report = verify_module_axioms(mislabeled)
        failed = {c.axiom for c in report.failures()}
        assert "scalar-associativity" in failed


class TestIdealsAsModules:
    def test_every_right_ideal_is_a_right_module(self, fixture_rings):
        for name, ring in fixture_rings.items():
            for mask in enumerate_one_sided_ideals(ring, "right"):
                report = verify_module_axioms(ideal_as_module(ring, mask, "right"))
                assert report.ok, (name, format(mask, "#x"), report.failures())

    def test_every_left_ideal_is_a_left_module(self, m2f2, triangular):
        for ring in (m2f2, triangular):
            for mask in enumerate_one_sided_ideals(ring, "left"):
                report = verify_module_axioms(ideal_as_module(ring, mask, "left"))
                assert report.ok

    def test_non_ideal_rejected(self, m2f2):
        with pytest.raises(RinguaError):
            ideal_as_module(m2f2, members_to_mask([0, 2, 8, 10]), "right")


class TestFaultInjection:
    def test_corrupted_action_names_witness(self, z4):
        module = regular_module(z4, "right")
        action = [list(r) for r in module.action]
        action[1][2] = 0  # 1.2 should be 2
        broken = ModuleSpec(module.group, module.ring, action, "right")
        report = verify_module_axioms(broken)
        assert not report.ok
        failed = {c.axiom: c.witness for c in report.failures()}
        assert "scalar-distributivity" in failed
        x, a, b = failed["scalar-distributivity"]
        assert action[x][z4.add[a][b]] != z4.add[action[x][a]][action[x][b]]

    def test_bad_group_short_circuits(self, z4):
        group = GroupSpec(4, [[0, 1, 2, 3]] * 4, 0)  # not a group table
        broken = ModuleSpec(group, z4, [list(r) for r in z4.mul], "right")
        report = verify_module_axioms(broken)
        assert not report.ok

    def test_unitary_law_checked(self, z4):
        module = regular_module(z4, "right")
        action = [list(r) for r in module.action]
        action[3][1] = 0  # 3.1 should be 3
        report = verify_module_axioms(ModuleSpec(module.group, z4, action, "right"))
        assert "unitary" in {c.axiom for c in report.failures()}


class TestQuotientModule:
    def test_upper_row_quotient(self, m2f2):
        q = quotient_right_module(m2f2, UPPER_ROW_MASK)
        assert len(q.cosets) == 4
        assert verify_module_axioms(q.module).ok
        assert not q.multiplication_well_defined
        x, x2, y, y2, p, pq = q.multiplication_witness
        coset_of = {}
        for idx, coset in enumerate(q.cosets):
            for member in coset:
                coset_of[member] = idx
        assert coset_of[x] == coset_of[x2]
        assert coset_of[y] == coset_of[y2]
        assert coset_of[p] != coset_of[pq]
        assert m2f2.mul[x][y] == p and m2f2.mul[x2][y2] == pq

    def test_quotient_by_zero_is_ring_itself(self, m2f2):
        q = quotient_right_module(m2f2, 1 << m2f2.zero)
        assert len(q.cosets) == m2f2.size
        assert q.multiplication_well_defined
        assert verify_module_axioms(q.module).ok

    def test_quotient_by_whole_is_zero_module(self, m2f2):
        q = quotient_right_module(m2f2, m2f2.full_mask)
        assert len(q.cosets) == 1
        assert q.multiplication_well_defined

    def test_two_sided_ideal_gives_well_defined_multiplication(self, triangular):
        ideal = members_to_mask([0, 2])  # {(0,m,0)}
        q = quotient_right_module(triangular, ideal)
        assert q.multiplication_well_defined
        assert verify_module_axioms(q.module).ok

    def test_left_ideal_rejected(self, m2f2):
        with pytest.raises(RinguaError):
            quotient_right_module(m2f2, members_to_mask([0, 2, 8, 10]))


class TestModuleJson:
    def test_round_trip_and_verify(self, z6):
        module = regular_module(z6, "right")
        data = json.loads(json.dumps(module.to_json()))
        loaded = module_from_json(data)
        assert verify_module_axioms(loaded).ok
        assert loaded.side == "right"
        assert loaded.action == module.action

    def test_missing_keys_rejected(self):
        from ringua import FormatError

        with pytest.raises(FormatError):
            module_from_json({"group": {}, "ring": {}, "action": []})
