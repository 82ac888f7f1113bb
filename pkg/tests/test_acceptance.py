"""End-to-end certification gate.

One test per release criterion, named so that a verbose run prints exactly one
pass/fail line for each.  Every comparison here is exact integer arithmetic;
there are no tolerances to tune.  Run with -s to see the summary lines even
when everything passes.
"""

import math
import random
import time

import pytest

from cmreg.bounds import (
    ideal_bounds,
    multiplicity_bound_series,
    multiplicity_bound_sum,
)
from cmreg.groebner import presentation_elements, syzygies_of
from cmreg.invariants import hilbert_data, hilbert_numerator, module_invariants
from cmreg.modops import degree_basis, dense_rank, span_vectors
from cmreg.verify import (
    audit,
    mayr_meyer,
    random_complete_intersection,
    random_module,
    random_section_form,
    random_tower,
    section_check,
    tower_check,
)

SWEEP_TRIALS = 200
SWEEP_BUDGET_SECONDS = 600.0


def _line(tag: str, ok: bool, detail: str) -> None:
    print(f"[acceptance] {tag}: {'PASS' if ok else 'FAIL'} -- {detail}")


def _sweep_instance(trial: int):
    # shape parameters and matrix entries come from independent streams so the
    # 200-instance box is reproducible field by field
    shape = random.Random(9001 + trial)
    return random_module(
        31337 + trial,
        p_vars=shape.randint(1, 3),
        n=shape.randint(1, 3),
        m=shape.randint(1, 5),
        max_a=2,
        max_b=4,
        density=0.4 + 0.6 * shape.random(),
    )


@pytest.fixture(scope="module")
def soundness_sweep():
    reports = []
    numerator_ok = 0
    start = time.perf_counter()
    for trial in range(SWEEP_TRIALS):
        pres = _sweep_instance(trial)
        report = audit(pres)
        reports.append(report)
        # lead-term numerator vs alternating Betti sum, recomputed in the open
        # rather than trusted to the audit's internal consistency check
        alternating: dict[int, int] = {}
        for i, j, v in report.computed["betti"]:
            alternating[j] = alternating.get(j, 0) + (-1) ** i * v
        lead = {k: v for k, v in hilbert_numerator(pres).items() if v}
        if lead == {k: v for k, v in alternating.items() if v}:
            numerator_ok += 1
    elapsed = time.perf_counter() - start
    return reports, numerator_ok, elapsed


def test_criterion_1_bound_soundness_sweep(soundness_sweep):
    reports, _, elapsed = soundness_sweep
    failures = []
    applied: dict[str, int] = {}
    for trial, report in enumerate(reports):
        for verdict in report.verdicts:
            applied[verdict["formula"]] = applied.get(verdict["formula"], 0) + 1
            if not verdict["holds"]:
                failures.append((trial, verdict))
    ok = not failures and elapsed < SWEEP_BUDGET_SECONDS
    _line(
        "criterion 1",
        ok,
        f"{len(reports)} modules, {sum(applied.values())} bound verdicts, "
        f"{len(failures)} failures, {elapsed:.1f}s",
    )
    assert len(reports) == SWEEP_TRIALS
    assert failures == []
    assert elapsed < SWEEP_BUDGET_SECONDS
    # the box must actually exercise every formula family
    assert {"main", "complex", "uniform_dim1", "fitt_dim1_ring", "fitt_dim1_module"} <= set(applied)
    assert any(k.startswith("sym_dim1_ring_l") for k in applied)
    assert any(k.startswith("sym_dim1_module_l") for k in applied)


def test_criterion_2_complete_intersections_exact():
    rng = random.Random(4242)
    checked = 0
    for _ in range(30):
        p_vars = rng.randint(1, 4)
        pres, degs = random_complete_intersection(
            rng.randrange(2**32),
            p_vars=p_vars,
            max_codim=min(3, p_vars),
            max_degree=4,
        )
        mi = module_invariants(pres)
        assert mi.regularity == sum(d - 1 for d in degs)  # Koszul oracle
        assert mi.hilbert.multiplicity == math.prod(degs)
        # one generator in degree 0, relation degrees = the form degrees, and
        # the column count is extremal, so the sum form is an equality
        assert multiplicity_bound_sum((0,), tuple(degs), len(degs), 1) == math.prod(degs)
        checked += 1
    _line("criterion 2", True, f"{checked} regular sequences, all three identities exact")


def test_criterion_3_multiplicity_sum_equals_series():
    rng = random.Random(777)
    for _ in range(1000):
        c = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = tuple(sorted(rng.randint(0, 2) for _ in range(n)))
        b = tuple(rng.randint(1, 6) for _ in range(c + n - 1))
        assert multiplicity_bound_sum(a, b, c, 1) == multiplicity_bound_series(a, b, c, 1)
    _line("criterion 3", True, "sum form == series form on 1000 degree tuples")


def _modules_of_dimension(target: int, count: int, seed: int, p_vars_choices):
    rng = random.Random(seed)
    out = []
    guard = 0
    while len(out) < count:
        guard += 1
        assert guard < 200 * count, f"could not find {count} modules of dimension {target}"
        pres = random_module(
            rng.randrange(2**32),
            p_vars=rng.choice(p_vars_choices),
            n=rng.randint(1, 2),
            m=rng.randint(1, 4),
            density=0.5 + 0.5 * rng.random(),
        )
        if int(hilbert_data(pres).dimension) == target:
            out.append(pres)
    return out


def test_criterion_4_section_identities():
    rng = random.Random(2025)
    total = 0
    violations = 0
    for target in (1, 2):
        for pres in _modules_of_dimension(target, 25, 5150 + target, (2, 3)):
            form = random_section_form(pres, rng)
            report = section_check(pres, form)
            total += 1
            if not report.all_hold:
                violations += 1
    _line(
        "criterion 4",
        violations == 0,
        f"{total} instances (25 each in dimension 1 and 2), {violations} violations",
    )
    assert total == 50 and violations == 0


def test_criterion_5_hyperplane_towers():
    rng = random.Random(33)
    total = 0
    violations = 0
    for delta in (2, 3):
        choices = (3,) if delta == 3 else (2, 3)
        for pres in _modules_of_dimension(delta, 25, 8800 + delta, choices):
            forms = random_tower(pres, rng, levels=delta)
            report = tower_check(pres, forms)
            total += 1
            if not report.all_hold:
                violations += 1
    _line(
        "criterion 5",
        violations == 0,
        f"{total} towers (25 each at dimension 2 and 3), {violations} violations",
    )
    assert total == 50 and violations == 0


def test_criterion_6_ideal_bound_numerics():
    assert ideal_bounds(3, 2)["small_p"] == 4  # 3 * (2 - 1) + 1
    grid = 0
    for p_vars in range(4, 9):
        for cap in range(2, 11):
            table = ideal_bounds(p_vars, cap)
            assert table["refined"] <= table["caviglia_sbarra"]
            grid += 1
    _line("criterion 6", True, f"small case == 4; refined <= caviglia_sbarra at {grid} grid points")


def test_criterion_7_engine_cross_checks(soundness_sweep):
    reports, numerator_ok, _ = soundness_sweep
    assert numerator_ok == len(reports) == SWEEP_TRIALS
    rng = random.Random(606)
    rank_checks = 0
    for _ in range(20):
        pres = random_module(
            rng.randrange(2**32),
            p_vars=rng.randint(2, 3),
            n=rng.randint(1, 2),
            m=rng.randint(1, 3),
        )
        p = pres.ring.field.p
        cols = presentation_elements(pres)
        syz = syzygies_of(cols, pres.ring, pres.row_twists)
        for d in range(max(pres.column_degrees) + 4):
            syz_rank = dense_rank(span_vectors(pres.ring, pres.column_degrees, syz, d), p)
            source = len(degree_basis(pres.ring, pres.column_degrees, d))
            image = dense_rank(span_vectors(pres.ring, pres.row_twists, cols, d), p)
            assert syz_rank == source - image  # rank-nullity, degree by degree
            rank_checks += 1
    _line(
        "criterion 7",
        True,
        f"{SWEEP_TRIALS} numerator cross-checks; {rank_checks} degreewise syzygy ranks "
        "against the dense oracle",
    )


def test_criterion_8_worst_case_generator_is_structural_only():
    pres = mayr_meyer(1)
    assert pres.ring.nvars == 21 and pres.m == 12
    assert sorted(pres.column_degrees) == [2] * 4 + [4] * 8
    deeper = mayr_meyer(2, d=3)
    assert deeper.ring.nvars == 31 and deeper.m == 20
    assert sorted(deeper.column_degrees) == [2] * 8 + [5] * 12
    # the family exists to blow up resolution-based invariants, so the contract
    # stops at shape checks: nothing here may call the resolution machinery
    _line("criterion 8", True, "counter ideals validated structurally, never resolved")
