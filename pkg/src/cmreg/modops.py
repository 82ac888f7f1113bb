"""Module operations: linear quotients, colon kernels, section functors
(saturation / degree profiles of the finite-length part), symmetric powers,
Fitting ideals, presentation minimalization, and dense degreewise linear
algebra used as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .core import (
    AlgebraError,
    GradedPresentation,
    GradedRing,
    Mono,
    NEG_INF,
    Polynomial,
    mono_mul,
    monomials_of_degree,
    validate_presentation,
)
from .groebner import (
    Element,
    elements_to_matrix,
    elt_degree,
    groebner,
    presentation_elements,
    quotient_groebner,
    reduce_poly,
    syzygies_of,
)
from .invariants import (
    hilbert_from_numerator,
    numerator_of_cokernel,
    numerator_of_gb,
    s_avatar,
    tp_divide_one_minus_t,
    tp_sub,
)


def _check_linear(pres: GradedPresentation, l: Polynomial) -> None:
    if l.ring != pres.ring.base:
        raise AlgebraError("form must live in the ambient polynomial ring")
    if l.is_zero() or not l.is_homogeneous() or l.degree() != 1:
        raise AlgebraError("expected a nonzero linear form")


def quotient_by_linear(pres: GradedPresentation, l: Polynomial) -> GradedPresentation:
    """M / l*M, presented by appending the columns l*e_i."""
    _check_linear(pres, l)
    if pres.is_zero_module:
        return pres
    matrix = [list(row) for row in pres.matrix]
    degrees = list(pres.column_degrees)
    zero = pres.ring.base.zero()
    for i in range(pres.n):
        for r in range(pres.n):
            matrix[r].append(l if r == i else zero)
        degrees.append(pres.row_twists[i] + 1)
    return validate_presentation(pres.ring, pres.row_twists, matrix, degrees)


def _project(elt: Element, n: int) -> Element:
    return {(c, m): v for (c, m), v in elt.items() if c < n}


def _shift(elt: Element, offset: int) -> Element:
    return {(c + offset, m): v for (c, m), v in elt.items()}


def submodule_members(
    ring: GradedRing, row_twists, columns: list[Element], scale: Polynomial
) -> list[Element]:
    """Generators of {v : scale * v in <columns>}, by projecting syzygies of
    [scale*Id | columns]."""
    n = len(row_twists)
    gens: list[Element] = []
    for i in range(n):
        gens.append({(i, m): c for m, c in scale.terms.items()})
    gens.extend(columns)
    out = []
    for s in syzygies_of(gens, ring, row_twists):
        w = _project(s, n)
        if w:
            out.append(w)
    return out


def colon_kernel(
    pres: GradedPresentation, l: Polynomial
) -> tuple[GradedPresentation, int | None]:
    """(presentation of K = (0 :_M l), its length or None when infinite)."""
    _check_linear(pres, l)
    if pres.is_zero_module:
        return pres, 0
    avatar = s_avatar(pres)
    base, a = avatar.ring, avatar.row_twists
    cols = presentation_elements(avatar)
    w_gens = submodule_members(base, a, cols, l)

    n_u = numerator_of_cokernel(base, a, cols)
    n_w = numerator_of_cokernel(base, a, w_gens)
    hd = hilbert_from_numerator(tp_sub(n_u, n_w), base.nvars)
    lam = hd.length

    if not w_gens:
        kpres = GradedPresentation(pres.ring, (), (), ())
    else:
        twists = tuple(int(elt_degree(w, a)) for w in w_gens)
        rels = []
        degrees = []
        for s in syzygies_of(w_gens + cols, base, a):
            r = _project(s, len(w_gens))
            if r:
                rels.append(r)
                degrees.append(int(elt_degree(r, twists)))
        matrix = elements_to_matrix(rels, len(w_gens), base)
        kpres = minimal_presentation(
            GradedPresentation(pres.ring, twists, matrix, tuple(degrees))
        )
    return kpres, lam


def _nonneg(num: dict[int, int]) -> dict[int, int]:
    if any(c < 0 for c in num.values()):
        raise AlgebraError("inconsistent numerator difference")
    return num


def colon_with_irrelevant(
    ring: GradedRing, row_twists, columns: list[Element]
) -> list[Element]:
    """Generators of {v : x_t * v in <columns> for every variable x_t}: stack one
    block per variable and project the syzygies of the stacked matrix."""
    n = len(row_twists)
    v = ring.nvars
    stacked_twists = tuple(row_twists) * v
    gens: list[Element] = []
    for i in range(n):
        g: Element = {}
        for t in range(v):
            mono = tuple(1 if k == t else 0 for k in range(v))
            g[(t * n + i, mono)] = 1
        gens.append(g)
    for col in columns:
        for t in range(v):
            gens.append(_shift(col, t * n))
    out = []
    for s in syzygies_of(gens, ring, stacked_twists):
        w = _project(s, n)
        if w:
            out.append(w)
    return out


@dataclass
class H0Profile:
    """Degreewise sizes of the finite-length part (sections supported at the
    irrelevant ideal)."""

    h0_by_degree: dict[int, int]
    a0: int | float  # top degree of the finite part, -inf when it vanishes
    indeg_h0: int | None
    a_span: int


def h0_profile(pres: GradedPresentation) -> tuple[H0Profile, GradedPresentation]:
    """Profile of the finite-length part of M plus a presentation of M' = M/H0,
    obtained by saturating the column module with the irrelevant ideal."""
    if pres.is_zero_module:
        return H0Profile({}, NEG_INF, None, 0), pres
    avatar = s_avatar(pres)
    base, a = avatar.ring, avatar.row_twists
    cur = presentation_elements(avatar)
    n_u = numerator_of_cokernel(base, a, cur)
    cur_n = n_u
    while True:
        bigger = colon_with_irrelevant(base, a, cur)
        # interreduce before the next stacking round: the projected syzygies
        # are heavily redundant and feeding them back raw snowballs
        gb = groebner(bigger, base, a)
        n_big = numerator_of_gb(gb)
        if n_big == cur_n:
            break
        cur, cur_n = gb.elements, n_big

    diff = tp_sub(n_u, cur_n)
    for _ in range(base.nvars):
        diff = tp_divide_one_minus_t(diff)
    h0 = _nonneg({e: c for e, c in diff.items() if c})

    if h0:
        a0: int | float = max(h0)
        indeg: int | None = min(h0)
        span = int(a0) - indeg + 1
    else:
        a0, indeg, span = NEG_INF, None, 0

    if cur:
        degrees = tuple(int(elt_degree(w, a)) for w in cur)
        matrix = elements_to_matrix(cur, pres.n, pres.ring.base)
        mprime = minimal_presentation(
            GradedPresentation(pres.ring, pres.row_twists, matrix, degrees)
        )
    else:
        mprime = GradedPresentation(
            pres.ring, pres.row_twists, tuple(() for _ in range(pres.n)), ()
        )
    return H0Profile(h0, a0, indeg, span), mprime


# -- symmetric powers and Fitting ideals -------------------------------------------


def sym_power(pres: GradedPresentation, l: int) -> GradedPresentation:
    """The l-th symmetric power of coker(phi): generators are the degree-l
    monomials in the module generators, one relation per (column of phi,
    degree-(l-1) monomial)."""
    if l < 0:
        raise AlgebraError("negative symmetric power")
    ring = pres.ring
    if l == 0:
        return validate_presentation(ring, (0,), [[]], [])
    gens = list(combinations_with_replacement(range(pres.n), l))
    index = {g: k for k, g in enumerate(gens)}
    twists = tuple(sum(pres.row_twists[i] for i in g) for g in gens)
    lower = list(combinations_with_replacement(range(pres.n), l - 1))
    matrix = [[] for _ in gens]
    degrees = []
    zero = ring.base.zero()
    for j in range(pres.m):
        for gamma in lower:
            col = [zero] * len(gens)
            for i in range(pres.n):
                target = index[tuple(sorted(gamma + (i,)))]
                col[target] = col[target] + pres.matrix[i][j]
            for k in range(len(gens)):
                matrix[k].append(col[k])
            degrees.append(
                pres.column_degrees[j] + sum(pres.row_twists[i] for i in gamma)
            )
    return validate_presentation(ring, twists, matrix, degrees)


def minor_function(matrix, ring: GradedRing):
    """Memoized Laplace expansion; returns minor(rows, cols) on index tuples."""
    cache: dict[tuple[tuple[int, ...], tuple[int, ...]], Polynomial] = {}

    def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if not rows:
            return ring.one()
        key = (rows, cols)
        got = cache.get(key)
        if got is not None:
            return got
        acc = ring.zero()
        rest = cols[1:]
        for pos, r in enumerate(rows):
            entry = matrix[r][cols[0]]
            if entry.is_zero():
                continue
            sub = minor(rows[:pos] + rows[pos + 1 :], rest)
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[key] = acc
        return acc

    return minor


def fitting_ideal_0(pres: GradedPresentation) -> list[Polynomial]:
    """Generators (the maximal minors of size n) of the 0-th Fitting ideal.
    An n x m matrix with m < n has none: the ideal is zero."""
    n, m = pres.n, pres.m
    if m < n:
        return []
    minor = minor_function(pres.matrix, pres.ring.base)
    all_rows = tuple(range(n))
    seen = set()
    out = []
    for cols in combinations(range(m), n):
        f = minor(all_rows, cols)
        if f.is_zero() or f in seen:
            continue
        seen.add(f)
        out.append(f)
    return out


# -- presentation minimalization ----------------------------------------------------


def _reduce_entry(ring: GradedRing, f: Polynomial) -> Polynomial:
    if not ring.is_quotient:
        return f
    return reduce_poly(f, quotient_groebner(ring))


def minimal_presentation(pres: GradedPresentation) -> GradedPresentation:
    """Normal-form the entries, cancel unit entries, drop zero columns.  A module
    that cancels away entirely comes back as the flagged zero presentation."""
    ring = pres.ring
    field = ring.field
    zero_mono = (0,) * ring.nvars
    matrix = [
        [_reduce_entry(ring, e) for e in row] for row in pres.matrix
    ]
    twists = list(pres.row_twists)
    degrees = list(pres.column_degrees)

    def find_unit():
        for j in range(len(degrees)):
            for i in range(len(twists)):
                f = matrix[i][j]
                if len(f.terms) == 1 and zero_mono in f.terms:
                    return i, j
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        i, j = hit
        uinv = field.inv(matrix[i][j].terms[zero_mono])
        rows = [r for r in range(len(twists)) if r != i]
        cols = [s for s in range(len(degrees)) if s != j]
        matrix = [
            [
                _reduce_entry(ring, matrix[r][s] - matrix[r][j] * matrix[i][s] * uinv)
                for s in cols
            ]
            for r in rows
        ]
        twists.pop(i)
        degrees.pop(j)

    keep = [
        j for j in range(len(degrees)) if any(not row[j].is_zero() for row in matrix)
    ]
    matrix = [[row[j] for j in keep] for row in matrix]
    degrees = [degrees[j] for j in keep]
    return GradedPresentation(
        ring,
        tuple(twists),
        tuple(tuple(row) for row in matrix),
        tuple(degrees),
    )


# -- dense degreewise linear algebra (oracle path) ----------------------------------


def degree_basis(ring: GradedRing, twists, d: int) -> list[tuple[int, Mono]]:
    out = []
    for i, a in enumerate(twists):
        for m in monomials_of_degree(ring.nvars, d - a):
            out.append((i, m))
    return out


def dense_rank(vectors: list[list[int]], p: int) -> int:
    """Row-reduce over F_p; the vectors are consumed as rows."""
    rows = [list(v) for v in vectors if any(v)]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(c * inv) % p for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def span_vectors(
    ring: GradedRing, twists, elements: list[Element], d: int
) -> list[list[int]]:
    """Dense vectors spanning the degree-d piece of the submodule the elements
    generate, in the monomial basis of the ambient free module."""
    basis = degree_basis(ring, twists, d)
    where = {bm: k for k, bm in enumerate(basis)}
    out = []
    for elt in elements:
        t = elt_degree(elt, twists)
        if t == NEG_INF:
            continue
        for mono in monomials_of_degree(ring.nvars, d - int(t)):
            vec = [0] * len(basis)
            for (c, m), coeff in elt.items():
                vec[where[(c, mono_mul(m, mono))]] = coeff % ring.field.p
            out.append(vec)
    return out


def hilbert_value_dense(
    ring: GradedRing, twists, elements: list[Element], d: int
) -> int:
    """dim of (free/submodule) in degree d, by brute-force rank."""
    total = len(degree_basis(ring, twists, d))
    return total - dense_rank(span_vectors(ring, twists, elements, d), ring.field.p)


def hilbert_series_dense(pres: GradedPresentation, d: int) -> int:
    avatar = s_avatar(pres)
    return hilbert_value_dense(
        avatar.ring, avatar.row_twists, presentation_elements(avatar), d
    )
