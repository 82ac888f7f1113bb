"""Resolutions, Betti tables, regularity, Hilbert series and derived invariants.

Modules over a quotient ring R are resolved over the ambient polynomial ring S
via their "avatar": the presentation with the quotient-ideal columns appended.
Regularity, Betti numbers and Hilbert data all come from that S-side picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    AlgebraError,
    GradedPresentation,
    GradedRing,
    Mono,
    NEG_INF,
    Polynomial,
    ZeroModule,
    free_presentation,
    validate_presentation,
)
from .groebner import (
    Element,
    FreeResolution,
    GroebnerBasis,
    elt_add_scaled,
    groebner,
    presentation_elements,
    schreyer_resolution,
)


def s_avatar(pres: GradedPresentation) -> GradedPresentation:
    """The same module presented over the ambient polynomial ring: the columns
    of phi plus one column q*e_i per quotient generator q and row i."""
    ring = pres.ring
    if not ring.is_quotient:
        return pres
    base = ring.base
    if pres.is_zero_module:
        return GradedPresentation(base, (), (), ())
    matrix = [list(row) for row in pres.matrix]
    degrees = list(pres.column_degrees)
    zero = base.zero()
    for i in range(pres.n):
        for q in ring.quotient_gens:
            for r in range(pres.n):
                matrix[r].append(q if r == i else zero)
            degrees.append(int(q.degree()) + pres.row_twists[i])
    return validate_presentation(base, pres.row_twists, matrix, degrees)


# -- minimalization --------------------------------------------------------------


def _is_unit(f: Polynomial) -> bool:
    if len(f.terms) != 1:
        return False
    (m, _), = f.terms.items()
    return not any(m)


def _find_unit(diffs) -> tuple[int, int, int] | None:
    # smallest step, then smallest column, then smallest row
    for k, mat in enumerate(diffs):
        rows = len(mat)
        cols = len(mat[0]) if rows else 0
        for j in range(cols):
            for i in range(rows):
                if _is_unit(mat[i][j]):
                    return k, i, j
    return None


def minimalize_resolution(res: FreeResolution) -> FreeResolution:
    """Cancel unit entries until none remain; the result is the minimal
    free resolution of the same cokernel."""
    field = res.ring.field
    twists = [list(t) for t in res.twists]
    diffs = [[list(row) for row in mat] for mat in res.differentials]

    while True:
        found = _find_unit(diffs)
        if found is None:
            break
        k, i, j = found
        mat = diffs[k]
        uinv = field.inv(mat[i][j].terms[(0,) * res.ring.nvars])
        rows = [r for r in range(len(mat)) if r != i]
        cols = [s for s in range(len(mat[0])) if s != j]
        diffs[k] = [
            [mat[r][s] - mat[r][j] * mat[i][s] * uinv for s in cols] for r in rows
        ]
        if k + 1 < len(diffs):
            diffs[k + 1] = [row for r, row in enumerate(diffs[k + 1]) if r != j]
        if k >= 1:
            diffs[k - 1] = [
                [entry for s, entry in enumerate(row) if s != i] for row in diffs[k - 1]
            ]
        twists[k].pop(i)
        twists[k + 1].pop(j)

    while len(twists) > 1 and not twists[-1]:
        twists.pop()
        diffs.pop()
    for level in twists[1:]:
        if not level:
            raise AlgebraError("minimalization left an internal zero level")
    if len(diffs) > res.ring.nvars:
        raise AlgebraError("minimal resolution longer than the variable count")

    return FreeResolution(
        ring=res.ring,
        twists=[tuple(t) for t in twists],
        differentials=[tuple(tuple(row) for row in mat) for mat in diffs],
    )


def minimal_resolution(pres: GradedPresentation) -> FreeResolution:
    return minimalize_resolution(schreyer_resolution(s_avatar(pres)))


def betti_from_resolution(res: FreeResolution) -> dict[tuple[int, int], int]:
    table: dict[tuple[int, int], int] = {}
    for i, level in enumerate(res.twists):
        for j in level:
            table[(i, j)] = table.get((i, j), 0) + 1
    return table


def betti_numbers(pres: GradedPresentation) -> dict[tuple[int, int], int]:
    return betti_from_resolution(minimal_resolution(pres))


def regularity_from_betti(table: dict[tuple[int, int], int]) -> int:
    if not table:
        raise ZeroModule("regularity of the zero module")
    return max(j - i for (i, j) in table)


def regularity(pres: GradedPresentation) -> int:
    return regularity_from_betti(betti_numbers(pres))


# -- integer polynomials in one variable t (dict exponent -> coefficient) --------


def tp_add(f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def tp_sub(f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    return tp_add(f, {e: -c for e, c in g.items()})


def tp_shift(f: dict[int, int], k: int) -> dict[int, int]:
    return {e + k: c for e, c in f.items()}


def tp_eval1(f: dict[int, int]) -> int:
    return sum(f.values())


def tp_divide_one_minus_t(f: dict[int, int]) -> dict[int, int]:
    """Exact division by (1 - t); requires f(1) = 0."""
    if tp_eval1(f) != 0:
        raise AlgebraError("polynomial not divisible by (1-t)")
    if not f:
        return {}
    lo, hi = min(f), max(f)
    out: dict[int, int] = {}
    running = 0
    for e in range(lo, hi + 1):
        running += f.get(e, 0)
        if running:
            out[e] = running
    return out


# -- Hilbert numerators -----------------------------------------------------------


def _minimalize_monos(monos) -> frozenset:
    monos = set(monos)
    keep = []
    for m in sorted(monos, key=lambda m: (sum(m), m)):
        if not any(all(x <= y for x, y in zip(k, m)) for k in keep):
            keep.append(m)
    return frozenset(keep)


@lru_cache(maxsize=None)
def _numerator_of_lead_terms(monos: frozenset) -> tuple[tuple[int, int], ...]:
    """Numerator of Hilb(S/L) * (1-t)^v for the monomial ideal L, by splitting
    along the most frequent variable: N(L) = N(L + x) + t * N(L : x)."""
    if not monos:
        return ((0, 1),)
    if any(not any(m) for m in monos):
        return ()
    nvars = len(next(iter(monos)))
    if all(sum(1 for e in m if e) == 1 for m in monos):
        # pure powers of distinct variables: product formula
        out = {0: 1}
        for m in monos:
            out = tp_sub(out, tp_shift(out, sum(m)))
        return tuple(sorted(out.items()))
    # pivot: most frequent variable among the mixed (non-pure-power) generators,
    # so both branches strictly shrink
    counts = [0] * nvars
    for m in monos:
        if sum(1 for e in m if e) >= 2:
            for v, e in enumerate(m):
                if e:
                    counts[v] += 1
    pivot = max(range(nvars), key=lambda v: counts[v])
    plus = _minimalize_monos(
        [m for m in monos if m[pivot] == 0]
        + [tuple(1 if v == pivot else 0 for v in range(nvars))]
    )
    colon = _minimalize_monos(
        tuple(e - 1 if v == pivot and e else e for v, e in enumerate(m)) for m in monos
    )
    total = tp_add(
        dict(_numerator_of_lead_terms(plus)),
        tp_shift(dict(_numerator_of_lead_terms(colon)), 1),
    )
    return tuple(sorted(total.items()))


def numerator_of_gb(gb: GroebnerBasis) -> dict[int, int]:
    """Hilbert numerator of the cokernel presented by an already computed
    Groebner basis, from its lead terms alone."""
    row_twists = gb.row_twists
    by_comp: dict[int, list[Mono]] = {i: [] for i in range(len(row_twists))}
    for c, m in gb.lts:
        by_comp[c].append(m)
    total: dict[int, int] = {}
    for i, twist in enumerate(row_twists):
        part = dict(_numerator_of_lead_terms(_minimalize_monos(by_comp[i])))
        total = tp_add(total, tp_shift(part, twist))
    return total


def numerator_of_cokernel(
    ring: GradedRing, row_twists, elements: list[Element]
) -> dict[int, int]:
    """Hilbert numerator of coker(elements -> free module with row_twists),
    over a plain ring, from the lead terms of a Groebner basis."""
    return numerator_of_gb(groebner(elements, ring, row_twists))


def hilbert_numerator(pres: GradedPresentation) -> dict[int, int]:
    avatar = s_avatar(pres)
    return numerator_of_cokernel(
        avatar.ring, avatar.row_twists, presentation_elements(avatar)
    )


def numerator_from_resolution(res: FreeResolution) -> dict[int, int]:
    """Alternating sum of twists: the independent cross-check path."""
    total: dict[int, int] = {}
    for i, level in enumerate(res.twists):
        sign = -1 if i % 2 else 1
        for j in level:
            total = tp_add(total, {j: sign})
    return total


@dataclass
class HilbertData:
    numerator: dict[int, int]
    var_count: int
    dimension: int | float  # -inf for the zero module
    codimension: int | None
    multiplicity: int
    length: int | None  # None when infinite
    q_polynomial: dict[int, int]


def hilbert_from_numerator(num: dict[int, int], var_count: int) -> HilbertData:
    num = {e: c for e, c in num.items() if c}
    if not num:
        return HilbertData(
            numerator={},
            var_count=var_count,
            dimension=NEG_INF,
            codimension=None,
            multiplicity=0,
            length=0,
            q_polynomial={},
        )
    q = dict(num)
    c = 0
    while tp_eval1(q) == 0:
        q = tp_divide_one_minus_t(q)
        c += 1
    delta = var_count - c
    e = tp_eval1(q)
    if delta < 0 or e <= 0:
        raise AlgebraError("Hilbert numerator inconsistent with a nonzero module")
    return HilbertData(
        numerator=num,
        var_count=var_count,
        dimension=delta,
        codimension=c,
        multiplicity=e,
        length=e if delta == 0 else None,
        q_polynomial=q,
    )


def hilbert_data(pres: GradedPresentation) -> HilbertData:
    return hilbert_from_numerator(hilbert_numerator(pres), pres.ring.nvars)


# -- generator/relation degrees over the presented ring ---------------------------


def b0_degrees(res: FreeResolution) -> list[int]:
    """Degrees of a minimal generating set (same over S and over R = S/J)."""
    return sorted(res.twists[0]) if res.twists else []


def b1_degrees(pres: GradedPresentation) -> dict[int, int]:
    """Degrees (with multiplicity) of minimal first syzygies over the presented
    ring.  Over a quotient ring, counted by the graded Nakayama quotient
    (im phi + JG) / (m*(im phi) + JG), whose series is a polynomial."""
    ring = pres.ring
    if not ring.is_quotient:
        res = minimal_resolution(pres)
        if len(res.twists) < 2:
            return {}
        out: dict[int, int] = {}
        for j in res.twists[1]:
            out[j] = out.get(j, 0) + 1
        return out

    base = ring.base
    avatar = s_avatar(pres)  # columns of phi, then JG columns
    phi_cols = presentation_elements(pres)
    jg_cols = presentation_elements(avatar)[pres.m :]
    p = base.field.p
    m_phi: list[Element] = []
    for col in phi_cols:
        if not col:
            continue
        for v in range(base.nvars):
            mono = tuple(1 if t == v else 0 for t in range(base.nvars))
            shifted: Element = {}
            elt_add_scaled(shifted, col, mono, 1, p)
            m_phi.append(shifted)

    big = numerator_of_cokernel(base, pres.row_twists, m_phi + jg_cols)
    small = numerator_of_cokernel(base, pres.row_twists, phi_cols + jg_cols)
    diff = tp_sub(big, small)
    for _ in range(base.nvars):
        diff = tp_divide_one_minus_t(diff)
    if any(c < 0 for c in diff.values()):
        raise AlgebraError("negative syzygy count")
    return {e: c for e, c in diff.items() if c}


# -- ring-level invariants ---------------------------------------------------------


@lru_cache(maxsize=None)
def ring_invariants(ring: GradedRing) -> tuple[int, int, int, bool]:
    """(dim R, deg R, reg R, is_cohen_macaulay), treating R = S/J as S-module."""
    pres = free_presentation(ring, (0,))
    res = minimal_resolution(pres)
    hd = hilbert_from_numerator(numerator_from_resolution(res), ring.nvars)
    reg = regularity_from_betti(betti_from_resolution(res))
    is_cm = res.length == hd.codimension
    return int(hd.dimension), hd.multiplicity, reg, is_cm


@lru_cache(maxsize=None)
def quotient_ideal_gen_degrees(ring: GradedRing) -> list[int]:
    """Degrees of minimal generators of the defining ideal J (empty for J = 0)."""
    if not ring.is_quotient:
        return []
    res = minimal_resolution(free_presentation(ring, (0,)))
    return sorted(res.twists[1]) if len(res.twists) > 1 else []


@dataclass
class ModuleInvariants:
    presentation: GradedPresentation
    resolution: FreeResolution
    betti: dict[tuple[int, int], int]
    regularity: int
    hilbert: HilbertData
    is_cm: bool


def module_invariants(pres: GradedPresentation) -> ModuleInvariants:
    res = minimal_resolution(pres)
    betti = betti_from_resolution(res)
    if not betti:
        raise ZeroModule("module is zero")
    hd = hilbert_from_numerator(numerator_from_resolution(res), pres.ring.nvars)
    return ModuleInvariants(
        presentation=pres,
        resolution=res,
        betti=betti,
        regularity=regularity_from_betti(betti),
        hilbert=hd,
        is_cm=res.length == hd.codimension,
    )
