import random

import pytest

from cmreg.core import AlgebraError, GradedRing, PrimeField, ZeroModule, validate_presentation
from cmreg.invariants import hilbert_data, regularity
from cmreg.verify import (
    audit,
    audit_random,
    mayr_meyer,
    random_complete_intersection,
    random_module,
    random_section_form,
    random_tower,
    section_check,
    tower_check,
)

F = PrimeField(101)
R2 = GradedRing(F, ("x", "y"))
R3 = GradedRing(F, ("x", "y", "z"))
u, v = R2.gens()
x, y, z = R3.gens()


def cyclic(ring, polys):
    return validate_presentation(ring, (0,), [list(polys)])


# -- random instances --------------------------------------------------------------


def test_random_module_is_deterministic():
    one = random_module(42, p_vars=3, n=2, m=4)
    two = random_module(42, p_vars=3, n=2, m=4)
    assert one.row_twists == two.row_twists
    assert one.column_degrees == two.column_degrees
    assert one.matrix == two.matrix
    other = random_module(43, p_vars=3, n=2, m=4)
    assert (one.row_twists, one.matrix) != (other.row_twists, other.matrix)


def test_random_module_respects_ranges():
    for seed in range(10):
        pres = random_module(seed, p_vars=2, n=3, m=5, max_a=2, max_b=4)
        assert not pres.is_zero_module
        assert all(0 <= a <= 2 for a in pres.row_twists)
        assert all(1 <= b <= 4 for b in pres.column_degrees)
        # degree-zero entries are never drawn, so presentations come back minimal
        assert all(
            e.is_zero() or e.degree() >= 1 for row in pres.matrix for e in row
        )


def test_random_complete_intersection_certified():
    pres, degs = random_complete_intersection(7, p_vars=3, max_codim=3, max_degree=3)
    hd = hilbert_data(pres)
    assert hd.codimension == len(degs)
    assert regularity(pres) == sum(d - 1 for d in degs)
    prod = 1
    for d in degs:
        prod *= d
    assert hd.multiplicity == prod


# -- the audit ----------------------------------------------------------------------


def test_audit_low_dim_module_runs_every_family():
    pres = cyclic(R2, [u * u, u * v])  # dim 1 over a dim-2 ring
    report = audit(pres)
    names = {e["formula"] for e in report.bounds if e["applicable"]}
    assert names == {
        "sym_dim1_module_l1",
        "sym_dim1_module_l2",
        "sym_dim1_module_l3",
        "fitt_dim1_module",
        "uniform_dim1",
        "main",
        "complex",
    }
    assert report.all_hold
    by_name = {e["formula"]: e["value"] for e in report.bounds}
    assert by_name["main"] == 2
    assert by_name["uniform_dim1"] == 2
    assert by_name["complex"] == 2
    assert by_name["fitt_dim1_module"] == 2
    assert report.computed["regularity"] == 1
    assert report.computed["fitting_regularity"] == 1


def test_audit_high_dim_module_keeps_only_main():
    pres = cyclic(R3, [x * x, x * y])  # dim 2 over a dim-3 ring
    report = audit(pres)
    names = [e["formula"] for e in report.bounds if e["applicable"]]
    assert names == ["main"]
    assert report.bounds[0]["value"] == 6
    assert report.all_hold
    assert report.verdicts == [
        {"formula": "main", "bound": 6, "actual": 1, "holds": True}
    ]


def test_audit_over_dim1_ring():
    r1 = GradedRing(F, ("x",))
    t = r1.var("x")
    pres = validate_presentation(r1, (0, 0), [[t * t, r1.zero()], [r1.zero(), t * t]])
    report = audit(pres)
    names = {e["formula"] for e in report.bounds if e["applicable"]}
    assert {"sym_dim1_ring_l1", "fitt_dim1_ring", "uniform_dim1", "main"} <= names
    assert report.all_hold


def test_audit_rejects_zero_module():
    pres = cyclic(R2, [R2.one()])
    with pytest.raises(ZeroModule):
        audit(pres)


def test_audit_random_seeds_hold_and_repeat():
    one = audit_random(5, p_vars=3, n=2, m=4)
    two = audit_random(5, p_vars=3, n=2, m=4)
    assert one.all_hold
    assert one.bounds == two.bounds and one.verdicts == two.verdicts
    assert one.instance["seed"] == 5
    assert one.computed["betti"] == two.computed["betti"]


# -- section arithmetic --------------------------------------------------------------


def test_section_check_worked_example():
    pres = cyclic(R2, [u * u, u * v])
    report = section_check(pres, v)
    assert report.colon_length == 1
    assert report.kernel_by_degree == {1: 1}
    assert report.h0 == {1: 1}
    assert report.h0_bar == {0: 1, 1: 1}
    assert report.h0_bar_prime == {0: 1}
    assert report.mu_star == 2
    assert report.identity_cumulative and report.identity_per_degree
    assert report.upper_estimate and report.tail_bound
    assert report.all_hold


def test_section_check_regular_form_is_trivial():
    pres = cyclic(R3, [x * x, x * y])
    report = section_check(pres, z)  # z is a nonzerodivisor here
    assert report.colon_length == 0
    assert report.kernel_by_degree == {}
    assert report.all_hold


def test_random_section_form_finds_finite_torsion():
    pres = cyclic(R2, [u * u, u * v])
    rng = random.Random(3)
    l = random_section_form(pres, rng)
    assert section_check(pres, l).all_hold


# -- towers --------------------------------------------------------------------------


def test_tower_check_two_levels():
    pres = cyclic(R3, [x * x, x * y])  # dim 2: two forms take it down to dim 0
    report = tower_check(pres, [z, y])
    assert report.colon_lengths == [0, 1]
    assert report.q_values == [2, 2]
    assert report.chain_holds == [True]
    assert report.final_bound == 4  # Q_1 ** (2 ** 1)
    assert report.final_holds and report.all_hold


def test_tower_check_random_forms():
    pres = cyclic(R3, [x * x, x * y])
    forms = random_tower(pres, random.Random(11), levels=2)
    assert len(forms) == 2
    assert tower_check(pres, forms).all_hold


# -- worst-case family ---------------------------------------------------------------


def test_mayr_meyer_rejects_out_of_range_levels():
    for bad in (0, -1, 3):
        with pytest.raises(AlgebraError):
            mayr_meyer(k=bad)


def test_mayr_meyer_level_one_shape():
    pres = mayr_meyer(k=1, d=2)
    assert pres.ring.nvars == 21
    assert pres.m == 4 + 8
    assert sorted(pres.column_degrees) == [2] * 4 + [4] * 8
    gens = [pres.matrix[0][j] for j in range(pres.m)]
    assert len({str(g) for g in gens}) == pres.m  # pairwise distinct
    assert all(g.is_homogeneous() for g in gens)


def test_mayr_meyer_scales_with_level_and_exponent():
    pres = mayr_meyer(k=2, d=3)
    assert pres.ring.nvars == 31
    assert pres.m == 4 + 16
    assert sorted(pres.column_degrees) == [2] * 8 + [5] * 12
