"""Incidence matrix, solving, achievability, and unknotting plans."""

import random

import pytest

import regionchange as rc
from regionchange import gf2
from regionchange.errors import IndexMismatchError, MalformedError

from conftest import doubled_triangle


def test_hopf_incidence_all_ones(hopf):
    inc = rc.incidence_matrix(hopf)
    assert inc.matrix.n_rows == 4 and inc.matrix.n_cols == 2
    assert all(r == 0b11 for r in inc.matrix.rows)
    assert gf2.rank(inc.matrix) == 1


def test_trefoil_full_rank(trefoil):
    inc = rc.incidence_matrix(trefoil)
    assert gf2.rank(inc.matrix) == 3


def test_incidence_black_rows_first(trefoil):
    inc = rc.incidence_matrix(trefoil)
    cb = rc.checkerboard(trefoil)
    colors = [cb.colors[f] for f in inc.region_rows]
    assert colors == sorted(colors, reverse=True)  # BLACK=1 block, then WHITE=0


def test_nugatory_crossing_recorded_once(unknot1):
    inc = rc.incidence_matrix(unknot1)
    # One region meets the single crossing twice but its row is still (1).
    assert inc.matrix.n_rows == 3
    assert all(r == 1 for r in inc.matrix.rows)


def test_apply_rcc_flips_boundary_crossings(trefoil):
    inc = rc.incidence_matrix(trefoil)
    r = 0b1  # first region row
    after = rc.apply_rcc(trefoil, r, inc)
    expected = inc.matrix.rows[0]
    for p in range(trefoil.c):
        changed = after.over_is_odd[p] != trefoil.over_is_odd[p]
        assert changed == bool((expected >> p) & 1)


def test_apply_rcc_additive(corpus):
    rng = random.Random(5)
    for d in corpus[:25]:
        inc = rc.incidence_matrix(d)
        r1 = rng.getrandbits(d.c + 2)
        r2 = rng.getrandbits(d.c + 2)
        a = rc.apply_rcc(rc.apply_rcc(d, r1, inc), r2, inc)
        b = rc.apply_rcc(d, r1 ^ r2, inc)
        assert a.over_is_odd == b.over_is_odd


def test_vector_length_checks(trefoil):
    with pytest.raises(IndexMismatchError):
        rc.apply_rcc(trefoil, 1 << 5)
    with pytest.raises(IndexMismatchError):
        rc.solve_regions(trefoil, 1 << 3)
    with pytest.raises(IndexMismatchError):
        rc.achievable(trefoil, 1 << 3)


def test_knot_targets_all_solvable(trefoil):
    inc = rc.incidence_matrix(trefoil)
    for t in range(1 << trefoil.c):
        witness = rc.solve_regions(trefoil, t, inc)
        assert witness is not None
        assert inc.matrix.vec_mat(witness) == t


def test_hopf_achievability(hopf):
    assert rc.achievable(hopf, 0b00)
    assert rc.achievable(hopf, 0b11)
    assert not rc.achievable(hopf, 0b01)
    assert not rc.achievable(hopf, 0b10)
    assert rc.solve_regions(hopf, 0b01) is None


def test_component_count(corpus):
    for d in corpus:
        assert rc.component_count(d) == len(d.components)


def test_is_knot_graph(trefoil, hopf):
    assert rc.is_knot_graph(rc.tait_graph(trefoil))
    assert not rc.is_knot_graph(rc.tait_graph(hopf))


def test_even_degree_test(hopf, trefoil):
    assert rc.even_degree_test(rc.tait_graph(hopf))
    assert not rc.even_degree_test(rc.tait_graph(trefoil))


def test_descending_target_reaches_descending(corpus):
    for d in corpus[:40]:
        t = rc.descending_target(d)
        if not rc.achievable(d, t):
            continue
        plan = rc.solve_regions(d, t)
        after = rc.apply_rcc(d, plan)
        assert rc.is_descending(after)


def test_descending_target_order_validation(hopf):
    with pytest.raises(MalformedError):
        rc.descending_target(hopf, order=[0, 0])


def test_descending_target_respects_order(hopf):
    # Reversing the stacking order flips which component goes on top: the
    # two targets differ exactly on the inter-component crossings.
    t01 = rc.descending_target(hopf, order=[0, 1])
    t10 = rc.descending_target(hopf, order=[1, 0])
    assert t01 ^ t10 == 0b11


def test_unknottable_fixtures(trefoil, hopf, t24, chain3):
    assert rc.unknottable_by_rcc(trefoil)
    assert not rc.unknottable_by_rcc(hopf)  # lk = 1
    assert rc.unknottable_by_rcc(t24)  # lk = 2
    assert not rc.unknottable_by_rcc(chain3)  # middle component has total lk 2, ends 1


def test_unknottable_pairwise_odd_instance():
    d = rc.medial_diagram(doubled_triangle())
    # All pairwise linking numbers are odd, yet each component's total with
    # the rest is even, so an unlinking plan exists.
    assert rc.unknottable_by_rcc(d)
    plan = rc.unknot_plan(d)
    assert plan is not None
    assert rc.is_descending(rc.apply_rcc(d, plan))


def test_unknot_plan_trefoil(trefoil):
    plan = rc.unknot_plan(trefoil)
    assert plan is not None
    assert rc.is_descending(rc.apply_rcc(trefoil, plan))


def test_unknot_plan_infeasible(hopf):
    assert rc.unknot_plan(hopf) is None
