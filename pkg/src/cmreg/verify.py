"""Empirical certification of the bound formulas.

Everything here compares a formula against a value the engine actually
computes: `audit` evaluates every bound whose hypotheses a module satisfies
and checks it against the true regularity (of the module, its symmetric
powers, or its Fitting quotient), `section_check` verifies the arithmetic
relating torsion of a linear form to finite-length sections, and
`tower_check` walks a quotient tower and tests the squaring recursion that
drives the doubly exponential bound.  `random_module` supplies seeded,
reproducible instances; `mayr_meyer` builds the classical worst-case family
(only its shape is ever inspected -- resolving it is the whole point of not
trusting single examples).
"""

from dataclasses import dataclass, field
from math import comb
import random
import time

from .core import (
    AlgebraError,
    GradedPresentation,
    GradedRing,
    NEG_INF,
    Polynomial,
    PrimeField,
    ZeroModule,
    monomials_of_degree,
    render_poly,
    validate_presentation,
)
from .invariants import (
    b1_degrees,
    hilbert_data,
    hilbert_numerator,
    module_invariants,
    numerator_from_resolution,
    quotient_ideal_gen_degrees,
    regularity,
    ring_invariants,
)
from .modops import (
    colon_kernel,
    fitting_ideal_0,
    h0_profile,
    minimal_presentation,
    quotient_by_linear,
    sym_power,
)
from .complexes import complex_regularity_bound, complex_terms
from .bounds import (
    dim1_module_fitt,
    dim1_module_sym,
    dim1_ring_fitt,
    dim1_ring_sym,
    main_bound,
    uniform_dim1_bound,
)

# true values are only computed when they stay cheap
SYM_TARGET_GEN_LIMIT = 20
FITT_TARGET_ROW_LIMIT = 4


# -- random instances ----------------------------------------------------------------


def _variable_names(count: int) -> tuple[str, ...]:
    short = ("x", "y", "z", "w")
    if count <= len(short):
        return short[:count]
    return short + tuple(f"x{i}" for i in range(5, count + 1))


def random_polynomial(rng: random.Random, ring: GradedRing, degree: int) -> Polynomial:
    """Random nonzero homogeneous polynomial of the given degree."""
    if degree < 0:
        raise AlgebraError("cannot draw a polynomial of negative degree")
    monos = list(monomials_of_degree(ring.nvars, degree))
    p = ring.field.p
    terms = {m: rng.randrange(p) for m in monos}
    if not any(terms.values()):
        pick = monos[rng.randrange(len(monos))]
        terms[pick] = 1 + rng.randrange(p - 1)
    return Polynomial(ring, terms)


def random_linear_form(rng: random.Random, ring: GradedRing) -> Polynomial:
    return random_polynomial(rng, ring.base, 1)


def random_module(
    seed: int,
    *,
    p_vars: int = 3,
    char: int = 101,
    n: int = 2,
    m: int = 4,
    max_a: int = 2,
    max_b: int = 4,
    density: float = 0.75,
    order: str = "grevlex",
) -> GradedPresentation:
    """Seeded random graded module over F_char in `p_vars` variables.

    Generator twists land in [0, max_a], column degrees in [min(a)+1, max_b]
    (bumped up when max_b is too small to admit a nonzero entry).  Entries of
    degree zero are never drawn, so the output is a minimal presentation of a
    nonzero module.  Same seed, same module.
    """
    rng = random.Random(seed)
    ring = GradedRing(PrimeField(char), _variable_names(p_vars), order)
    for _ in range(50):
        a = tuple(sorted(rng.randint(0, max_a) for _ in range(n)))
        lo = min(a) + 1
        hi = max(max_b, lo)
        rows: list[list[Polynomial]] = [[] for _ in range(n)]
        degrees: list[int] = []
        stuck = False
        for _j in range(m):
            for _try in range(20):
                bj = rng.randint(lo, hi)
                col = []
                for i in range(n):
                    d = bj - a[i]
                    if d >= 1 and rng.random() < density:
                        col.append(random_polynomial(rng, ring, d))
                    else:
                        col.append(ring.zero())
                if any(not f.is_zero() for f in col):
                    break
            else:
                stuck = True
                break
            degrees.append(bj)
            for i in range(n):
                rows[i].append(col[i])
        if stuck:
            continue
        pres = minimal_presentation(validate_presentation(ring, a, rows, degrees))
        if not pres.is_zero_module:
            return pres
    raise AlgebraError("random search failed to produce a usable module")


def random_complete_intersection(
    seed: int,
    *,
    p_vars: int = 3,
    char: int = 101,
    max_codim: int = 3,
    max_degree: int = 4,
) -> tuple[GradedPresentation, list[int]]:
    """Cyclic quotient by a random regular sequence, plus the form degrees.

    Regularity of the sequence is certified by codimension == length of the
    sequence, so callers can rely on the complete-intersection identities.
    """
    rng = random.Random(seed)
    ring = GradedRing(PrimeField(char), _variable_names(p_vars))
    c = rng.randint(1, min(max_codim, p_vars))
    degs = [rng.randint(1, max_degree) for _ in range(c)]
    for _ in range(50):
        polys = [random_polynomial(rng, ring, d) for d in degs]
        pres = validate_presentation(ring, (0,), [polys])
        if hilbert_data(pres).codimension == c:
            return pres, degs
    raise AlgebraError("failed to draw a regular sequence; degrees too constrained")


# -- bound audit ---------------------------------------------------------------------


@dataclass
class BoundReport:
    """Everything one audited module produced, JSON-shaped."""

    instance: dict
    computed: dict
    bounds: list[dict] = field(default_factory=list)
    verdicts: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(v["holds"] for v in self.verdicts)


def _instance_summary(pres: GradedPresentation, extra: dict | None) -> dict:
    ring = pres.ring
    info = {
        "char": ring.field.p,
        "variables": list(ring.variables),
        "order": ring.order,
        "quotient": [render_poly(q) for q in ring.quotient_gens],
        "row_twists": list(pres.row_twists),
        "column_degrees": list(pres.column_degrees),
    }
    if extra:
        info.update(extra)
    return info


def audit(
    pres: GradedPresentation,
    instance: dict | None = None,
    sym_limit: int = 3,
    check: bool = True,
) -> BoundReport:
    """Evaluate every formula whose hypotheses the module satisfies, then
    compare each against the regularity of its actual target.

    The presentation is minimalized first: the closed forms are only claimed
    for minimal generator/relation degrees.  Symmetric-power formulas are
    checked against reg Sym_l(M) while the power stays small, Fitting-ideal
    formulas against reg R/Fitt_0(M), the rest against reg M itself.  With
    check=False the (possibly expensive) true targets are skipped and the
    report carries bound values only.
    """
    t0 = time.perf_counter()
    pres_min = minimal_presentation(pres)
    if pres_min.is_zero_module:
        raise ZeroModule("cannot audit the zero module")
    ring = pres_min.ring
    dim_r, deg_r, reg_r, cm_r = ring_invariants(ring)
    mi = module_invariants(pres_min)
    timings = {"invariants": time.perf_counter() - t0}

    # cross-check: the two numerator paths must agree before anything is scored
    if hilbert_numerator(pres_min) != numerator_from_resolution(mi.resolution):
        raise AlgebraError("Hilbert numerator mismatch between engine paths")

    a, b = pres_min.row_twists, pres_min.column_degrees
    n, m = pres_min.n, pres_min.m
    delta = int(mi.hilbert.dimension)
    c = dim_r - delta

    t1 = time.perf_counter()
    bounds: list[dict] = []

    def entry(formula: str, value, applicable: bool = True, l: int | None = None):
        bounds.append({"formula": formula, "l": l, "value": value, "applicable": applicable})

    if dim_r <= 1 and m >= 1:
        for l in range(1, sym_limit + 1):
            entry(f"sym_dim1_ring_l{l}", dim1_ring_sym(a, b, reg_r, dim_r, l), l=l)
        fv = dim1_ring_fitt(a, b, reg_r, dim_r)
        entry("fitt_dim1_ring", fv, applicable=fv is not None)
    if dim_r >= 2 and delta <= 1 and m >= n + dim_r - 2:
        for l in range(1, sym_limit + 1):
            entry(f"sym_dim1_module_l{l}", dim1_module_sym(a, b, reg_r, dim_r, l), l=l)
        entry("fitt_dim1_module", dim1_module_fitt(a, b, reg_r, dim_r))
    if delta <= 1 and max(a) <= 0 and (dim_r > 0 or n > 1):
        entry("uniform_dim1", uniform_dim1_bound(a, b, reg_r, dim_r))
    entry("main", main_bound(a, b, c, delta, reg_r, deg_r, cm_r))
    if delta <= 1:
        terms = complex_terms(a, b, 1)
        entry("complex", complex_regularity_bound(terms, reg_r, dim_r))
    timings["bounds"] = time.perf_counter() - t1

    t2 = time.perf_counter()
    sym_regs: dict[int, int] = {}
    if check:
        for l in sorted(
            {e["l"] for e in bounds if e["l"] is not None and e["applicable"]}
        ):
            if comb(n + l - 1, l) <= SYM_TARGET_GEN_LIMIT:
                sym_regs[l] = (
                    mi.regularity if l == 1 else regularity(sym_power(pres_min, l))
                )

    fitt_reg: int | None = None
    if check and any(e["formula"].startswith("fitt_") and e["applicable"] for e in bounds):
        if n <= FITT_TARGET_ROW_LIMIT:
            minors = fitting_ideal_0(pres_min)
            if minors:
                fitt_reg = regularity(validate_presentation(ring, (0,), [minors]))
            else:
                fitt_reg = reg_r  # zero Fitting ideal: the quotient is R itself

    verdicts: list[dict] = []

    def verdict(formula: str, bound, actual: int) -> None:
        verdicts.append(
            {"formula": formula, "bound": bound, "actual": actual, "holds": bound >= actual}
        )

    for e in bounds if check else ():
        if not e["applicable"]:
            continue
        name, val = e["formula"], e["value"]
        if name.startswith("sym_"):
            if e["l"] in sym_regs:
                verdict(name, val, sym_regs[e["l"]])
        elif name.startswith("fitt_"):
            if fitt_reg is not None:
                verdict(name, val, fitt_reg)
        elif name == "uniform_dim1":
            verdict(name, val, max(set(sym_regs.values()) | {mi.regularity}))
        else:  # main, complex
            verdict(name, val, mi.regularity)
    timings["verdicts"] = time.perf_counter() - t2

    computed = {
        "regularity": mi.regularity,
        "dimension": delta,
        "codimension": c,
        "multiplicity": mi.hilbert.multiplicity,
        "length": mi.hilbert.length,
        "is_cm": mi.is_cm,
        "betti": sorted([i, j, v] for (i, j), v in mi.betti.items()),
        "ring": {"dim": dim_r, "degree": deg_r, "regularity": reg_r, "is_cm": cm_r},
        "sym_regularities": {str(l): r for l, r in sym_regs.items()},
        "fitting_regularity": fitt_reg,
    }
    return BoundReport(
        instance=_instance_summary(pres_min, instance),
        computed=computed,
        bounds=bounds,
        verdicts=verdicts,
        timings=timings,
    )


def audit_random(seed: int, sym_limit: int = 3, **params) -> BoundReport:
    pres = random_module(seed, **params)
    return audit(pres, instance={"seed": seed, **params}, sym_limit=sym_limit)


# -- torsion/section arithmetic ------------------------------------------------------


@dataclass
class SectionReport:
    """Outcome of the torsion-vs-sections comparison for one linear form."""

    form: str
    window: tuple[int, int]
    colon_length: int
    kernel_by_degree: dict[int, int]
    h0: dict[int, int]
    h0_bar: dict[int, int]
    h0_bar_prime: dict[int, int]
    mu_star: int
    identity_rows: list[tuple[int, int, int]]  # (mu, lhs, rhs), cumulative form
    identity_cumulative: bool
    identity_per_degree: bool
    upper_estimate: bool
    tail_bound: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.identity_cumulative
            and self.identity_per_degree
            and self.upper_estimate
            and self.tail_bound
        )


def section_check(pres: GradedPresentation, l: Polynomial) -> SectionReport:
    """Compare the torsion K = (0 :_M l) against finite-length sections.

    With M' = M/H0(M), Mbar = M/lM and Mbar' = M'/lM', the lengths satisfy,
    degree by degree,

        len(K_mu) = h0(M)_mu - h0(M)_{mu+1} + h0(Mbar)_{mu+1} - h0(Mbar')_{mu+1},

    the window estimate h0(M)_{mu+a} <= sum_{j<=a} (h0(Mbar) - h0(Mbar'))_{mu+j}
    for a = the span of h0(M), and the section count at

        mu* = max(b0(M) + h - 1, b1(M) - 1, reg(Mbar) + 1),   h = max gen degree of J

    bounds the regularity: reg M <= mu - 1 + h0(M)_mu at mu in {mu*, mu*+1}.
    """
    if pres.is_zero_module:
        raise ZeroModule("section check needs a nonzero module")
    prof_m, mprime = h0_profile(pres)
    mbar = quotient_by_linear(pres, l)
    prof_bar, _ = h0_profile(mbar)
    mbar_prime = quotient_by_linear(mprime, l) if not mprime.is_zero_module else mprime
    prof_bar_prime, _ = h0_profile(mbar_prime)
    kpres, lam = colon_kernel(pres, l)
    if lam is None:
        raise AlgebraError("the form has infinite torsion; pick a more generic one")
    kvals = hilbert_data(kpres).q_polynomial if not kpres.is_zero_module else {}

    hm, hb, hbp = prof_m.h0_by_degree, prof_bar.h0_by_degree, prof_bar_prime.h0_by_degree
    support = set(hm) | set(hb) | set(hbp) | set(kvals)
    lo = min(support, default=0) - 1
    hi = max(support, default=0) + 2

    rows: list[tuple[int, int, int]] = []
    cumulative = per_degree = True
    for mu in range(lo, hi + 1):
        lhs = sum(v for e, v in kvals.items() if e >= mu)
        rhs = (
            hm.get(mu, 0)
            + sum(v for e, v in hb.items() if e > mu)
            - sum(v for e, v in hbp.items() if e > mu)
        )
        rows.append((mu, lhs, rhs))
        if lhs != rhs:
            cumulative = False
        step = (
            hm.get(mu, 0)
            - hm.get(mu + 1, 0)
            + hb.get(mu + 1, 0)
            - hbp.get(mu + 1, 0)
        )
        if kvals.get(mu, 0) != step:
            per_degree = False

    span = prof_m.a_span
    upper = True
    if span > 0:
        for mu in range(lo, hi + 1):
            gain = sum(
                hb.get(mu + j, 0) - hbp.get(mu + j, 0) for j in range(1, span + 1)
            )
            if hm.get(mu + span, 0) > gain:
                upper = False
                break

    mi = module_invariants(pres)
    b0 = max(mi.resolution.twists[0])
    b1 = b1_degrees(pres)
    h = max(quotient_ideal_gen_degrees(pres.ring), default=1)
    h = max(h, 1)
    candidates = [b0 + h - 1, regularity(mbar) + 1]
    if b1:
        candidates.append(max(b1) - 1)
    mu_star = max(candidates)
    tail = all(
        mi.regularity <= mu - 1 + hm.get(mu, 0) for mu in (mu_star, mu_star + 1)
    )

    return SectionReport(
        form=render_poly(l),
        window=(lo, hi),
        colon_length=lam,
        kernel_by_degree=dict(sorted(kvals.items())),
        h0=dict(sorted(hm.items())),
        h0_bar=dict(sorted(hb.items())),
        h0_bar_prime=dict(sorted(hbp.items())),
        mu_star=mu_star,
        identity_rows=rows,
        identity_cumulative=cumulative,
        identity_per_degree=per_degree,
        upper_estimate=upper,
        tail_bound=tail,
    )


def random_section_form(
    pres: GradedPresentation, rng: random.Random, attempts: int = 20
) -> Polynomial:
    """A linear form whose torsion on M is finite (resampled until it is)."""
    for _ in range(attempts):
        l = random_linear_form(rng, pres.ring)
        _, lam = colon_kernel(pres, l)
        if lam is not None:
            return l
    raise AlgebraError("no linear form with finite torsion found")


# -- quotient towers -----------------------------------------------------------------


@dataclass
class TowerReport:
    """Squaring recursion along a tower M -> M/l1 -> M/(l1,l2) -> ..."""

    forms: list[str]
    regularities: list[int]
    colon_lengths: list[int]
    q_values: list[int]
    chain_holds: list[bool]
    final_bound: int
    final_holds: bool

    @property
    def all_hold(self) -> bool:
        return all(self.chain_holds) and self.final_holds


def tower_check(pres: GradedPresentation, forms: list[Polynomial]) -> TowerReport:
    """Walk the quotient tower cut out by the forms and test, level by level,
    Q_i <= Q_{i+1}^2 with Q_i = 1 + max(reg M_i, len K_i, floor), where K_i is
    the torsion of the next form on M_i and the floor collects the generator
    and relation degrees of M.  The last level must certify reg M <= Q_s^(2^s).
    """
    if not forms:
        raise AlgebraError("a tower needs at least one form")
    if pres.is_zero_module:
        raise ZeroModule("tower check needs a nonzero module")
    if min(pres.row_twists) < 0:
        raise AlgebraError("tower floor assumes generators in nonnegative degrees")

    mi = module_invariants(pres)
    b0 = max(mi.resolution.twists[0])
    b1 = b1_degrees(pres)
    h = max(max(quotient_ideal_gen_degrees(pres.ring), default=1), 1)
    floor = b0 + h - 2
    if b1:
        floor = max(floor, max(b1) - 2)

    regs: list[int] = []
    lengths: list[int] = []
    qs: list[int] = []
    cur = pres
    for i, form in enumerate(forms):
        reg_i = mi.regularity if i == 0 else regularity(cur)
        _, lam = colon_kernel(cur, form)
        if lam is None:
            raise AlgebraError(f"form {i + 1} has infinite torsion on level {i}")
        regs.append(reg_i)
        lengths.append(lam)
        qs.append(1 + max(reg_i, lam, floor))
        if i + 1 < len(forms):
            cur = quotient_by_linear(cur, form)

    s = len(forms) - 1
    chain = [qs[i] <= qs[i + 1] ** 2 for i in range(s)]
    final_bound = qs[s] ** (2**s)
    return TowerReport(
        forms=[render_poly(f) for f in forms],
        regularities=regs,
        colon_lengths=lengths,
        q_values=qs,
        chain_holds=chain,
        final_bound=final_bound,
        final_holds=mi.regularity <= final_bound,
    )


def random_tower(
    pres: GradedPresentation, rng: random.Random, levels: int, attempts: int = 20
) -> list[Polynomial]:
    """Forms l_1..l_levels, each with finite torsion on the successive quotients."""
    forms: list[Polynomial] = []
    cur = pres
    for _ in range(levels):
        for _try in range(attempts):
            l = random_linear_form(rng, pres.ring)
            _, lam = colon_kernel(cur, l)
            if lam is not None:
                forms.append(l)
                cur = quotient_by_linear(cur, l)
                break
        else:
            raise AlgebraError("no form with finite torsion at some tower level")
    return forms


# -- worst-case family ---------------------------------------------------------------


def mayr_meyer(k: int = 1, d: int = 2, char: int = 101) -> GradedPresentation:
    """Homogeneous binary-counter ideal with doubly exponential complexity.

    One global degree variable z plus, per level r = 0..k, a start/finish pair
    (s_r, f_r) and two quadruples (b_r_i, c_r_i): 10(k+1)+1 variables.  Level 0
    contributes the four degree-(d+2) amplifiers

        s_0 c_0_i z^d - f_0 c_0_i b_0_i^d,

    and each level r >= 1 adds three degree-2 transfers, four level-r
    amplifiers, and one degree-2 drain: 4 + 8k generators in total.  Only the
    shape of this presentation is meant to be used; resolving it blows up
    doubly exponentially in k, which is exactly why it is here.  Levels beyond
    2 are refused outright -- nothing downstream could survive them.
    """
    if k < 1 or k > 2:
        raise AlgebraError("level must be 1 or 2")
    if d < 1:
        raise AlgebraError("amplification exponent must be positive")
    names = ["z"]
    for r in range(k + 1):
        names += [f"s{r}", f"f{r}"]
        names += [f"b{r}_{i}" for i in range(1, 5)]
        names += [f"c{r}_{i}" for i in range(1, 5)]
    ring = GradedRing(PrimeField(char), tuple(names))

    z = ring.var("z")
    s = [ring.var(f"s{r}") for r in range(k + 1)]
    f = [ring.var(f"f{r}") for r in range(k + 1)]
    bb = [[ring.var(f"b{r}_{i}") for i in range(1, 5)] for r in range(k + 1)]
    cc = [[ring.var(f"c{r}_{i}") for i in range(1, 5)] for r in range(k + 1)]

    gens: list[Polynomial] = []
    for i in range(4):
        gens.append(s[0] * cc[0][i] * z**d - f[0] * cc[0][i] * bb[0][i] ** d)
    for r in range(1, k + 1):
        gens.append(s[r] * z - s[r - 1] * cc[r - 1][0])
        gens.append(f[r - 1] * cc[r - 1][0] - s[r - 1] * cc[r - 1][1])
        gens.append(f[r - 1] * cc[r - 1][1] - f[r] * z)
        for i in range(4):
            gens.append(s[r] * cc[r][i] * z**d - f[r] * cc[r][i] * bb[r][i] ** d)
        gens.append(f[r] * bb[r - 1][1] - f[r] * z)
    return validate_presentation(ring, (0,), [gens])
