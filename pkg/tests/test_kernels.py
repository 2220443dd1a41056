"""Backend agreement: the compiled kernels must reproduce the pure ones
bit-for-bit (same witnesses, same orderings)."""

import pytest

from ringua import _purekernels as pure

fast = pytest.importorskip(
    "ringua._fastkernels", reason="compiled kernel extension not built"
)

import numpy as np


def _t(table):
    return np.ascontiguousarray(table, dtype=np.int32)


def _tables(ring):
    return ring.add, ring.mul


class TestWitnessAgreement:
    def test_clean_tables_have_no_witnesses(self, fixture_rings):
        for name, ring in fixture_rings.items():
            assert pure.first_nonassociative(ring.add) is None, name
            assert fast.first_nonassociative(_t(ring.add)) is None, name
            assert pure.first_left_distrib_violation(ring.add, ring.mul) is None
            assert fast.first_left_distrib_violation(_t(ring.add), _t(ring.mul)) is None

    def test_same_first_witness_on_broken_tables(self, z6):
        add = [list(r) for r in z6.add]
        mul = [list(r) for r in z6.mul]
        mul[3][4] = 1  # arbitrary corruption
        assert pure.first_nonassociative(mul) == tuple(fast.first_nonassociative(_t(mul)))
        assert pure.first_left_distrib_violation(add, mul) == tuple(
            fast.first_left_distrib_violation(_t(add), _t(mul))
        )
        assert pure.first_right_distrib_violation(add, mul) == tuple(
            fast.first_right_distrib_violation(_t(add), _t(mul))
        )

    def test_commutativity_witness(self, m2f2):
        w_pure = pure.first_noncommutative(m2f2.mul)
        w_fast = fast.first_noncommutative(_t(m2f2.mul))
        assert w_pure == tuple(w_fast)
        i, j = w_pure
        assert m2f2.mul[i][j] != m2f2.mul[j][i]


class TestSetAgreement:
    def test_subgroups_identical(self, fixture_rings):
        for name, ring in fixture_rings.items():
            subs_pure = pure.additive_subgroups(ring.add, ring.zero)
            subs_fast = fast.additive_subgroups(_t(ring.add), ring.zero)
            assert subs_pure == subs_fast, name

    def test_closure_identical(self, triangular):
        for seed in (1, 3, 1 << 5 | 1, 0b1010):
            assert pure.close_under_add(triangular.add, seed) == fast.close_under_add(
                _t(triangular.add), seed
            )

    def test_absorption_and_filter_identical(self, m2f2):
        masks = pure.additive_subgroups(m2f2.add, m2f2.zero)
        for side in ("left", "right"):
            assert pure.filter_absorbing(m2f2.mul, masks, side) == fast.filter_absorbing(
                _t(m2f2.mul), np.asarray(masks, dtype=np.uint64), side
            )
            for mask in masks:
                wp = pure.absorption_witness(m2f2.mul, mask, side)
                wf = fast.absorption_witness(_t(m2f2.mul), mask, side)
                assert wp == (tuple(wf) if wf is not None else None)

    def test_bad_side_rejected(self, z4):
        with pytest.raises(ValueError):
            pure.absorption_witness(z4.mul, 1, "middle")
        with pytest.raises(ValueError):
            fast.absorption_witness(_t(z4.mul), 1, "middle")
