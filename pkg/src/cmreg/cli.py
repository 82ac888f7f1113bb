"""Command-line front end and the presentation file format.

A module file is plain UTF-8 text:

    char 101
    vars x y z
    order grevlex        # optional; grevlex is the default
    quotient             # optional block: one homogeneous polynomial per line
    x^2
    end
    gens 0 0             # generator twists a_i, one integer per generator
    rels                 # one relation per line: n comma-separated entries
    x^2, x*y
    y^2, 0
    end

Relations are written one per line but are columns of the presentation matrix
internally.  Polynomials use integer coefficients, `+ - * ^`, and juxtaposition
of declared variable names (`2xy^3` reads as `2*x*y^3`).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
from dataclasses import asdict

from .core import (
    AlgebraError,
    GradedPresentation,
    GradedRing,
    NonHomogeneous,
    ORDER_KEYS,
    ParseError,
    Polynomial,
    PrimeField,
    render_poly,
    validate_presentation,
)
from .invariants import hilbert_data, module_invariants, regularity, ring_invariants
from .modops import fitting_ideal_0, minimal_presentation, sym_power
from .complexes import complex_regularity_bound, complex_terms
from .bounds import (
    degree_cap,
    ideal_bounds,
    multiplicity_bound_binomial,
    multiplicity_bound_series,
    multiplicity_bound_sum,
    refined_bracket_bound,
    refined_exact_bound,
)
from .verify import (
    audit,
    mayr_meyer,
    random_module,
    section_check,
    tower_check,
)

# -- polynomial and file parsing ------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9_]*)|([+\-*^])|(\S)")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _tokenize(text: str, line: int, col0: int) -> list[tuple[str, object, int]]:
    toks: list[tuple[str, object, int]] = []
    for mt in _TOKEN.finditer(text):
        col = col0 + mt.start() + 1
        if mt.group(1) is not None:
            toks.append(("int", int(mt.group(1)), col))
        elif mt.group(2) is not None:
            toks.append(("name", mt.group(2), col))
        elif mt.group(3) is not None:
            toks.append(("op", mt.group(3), col))
        else:
            raise ParseError(f"unexpected character {mt.group(4)!r}", line, col)
    return toks


def parse_polynomial(
    ring: GradedRing, text: str, line: int = 1, col0: int = 0
) -> Polynomial:
    """Parse one polynomial over the (plain) ring, with column diagnostics."""
    toks = _tokenize(text, line, col0)
    if not toks:
        raise ParseError("empty polynomial", line, col0 + 1)
    names_by_len = sorted(ring.variables, key=len, reverse=True)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None, None)

    def split_vars(name: str, col: int) -> list[Polynomial]:
        # greedy longest-match factorization of a juxtaposed identifier
        if name in ring.variables:
            return [ring.var(name)]
        parts: list[Polynomial] = []
        rest = name
        while rest:
            for nm in names_by_len:
                if rest.startswith(nm):
                    parts.append(ring.var(nm))
                    rest = rest[len(nm):]
                    break
            else:
                raise ParseError(f"unknown variable {name!r}", line, col)
        return parts

    def parse_factor() -> Polynomial:
        nonlocal pos
        kind, val, col = peek()
        if kind == "int":
            pos += 1
            if peek()[:2] == ("op", "^"):
                raise ParseError("exponent must follow a variable", line, peek()[2])
            return ring.constant(val)
        if kind == "name":
            pos += 1
            parts = split_vars(val, col)
            exp = 1
            if peek()[:2] == ("op", "^"):
                pos += 1
                ekind, eval_, ecol = peek()
                if ekind != "int":
                    raise ParseError("expected an integer exponent", line, ecol or col)
                exp = eval_
                pos += 1
            out = parts[-1] ** exp  # the exponent binds to the last variable
            for part in parts[:-1]:
                out = part * out
            return out
        raise ParseError("expected a coefficient or a variable", line, col or col0 + 1)

    def parse_term() -> Polynomial:
        nonlocal pos
        out = parse_factor()
        while True:
            kind, val, _col = peek()
            if kind == "op" and val == "*":
                pos += 1
                out = out * parse_factor()
            elif kind in ("int", "name"):
                out = out * parse_factor()
            else:
                return out

    total = ring.zero()
    sign = 1
    if peek()[:2] in (("op", "+"), ("op", "-")):
        sign = -1 if toks[pos][1] == "-" else 1
        pos += 1
    total = total + sign * parse_term()
    while pos < len(toks):
        kind, val, col = toks[pos]
        if kind != "op" or val not in "+-":
            raise ParseError("expected '+' or '-' between terms", line, col)
        pos += 1
        total = total + (-1 if val == "-" else 1) * parse_term()
    return total


def parse_file(text: str) -> GradedPresentation:
    """Parse a module file into a validated presentation."""
    raw = text.splitlines()
    content = [
        (no, s)
        for no, line in enumerate(raw, start=1)
        for s in [line.split("#", 1)[0].strip()]
        if s
    ]
    pos = 0

    def take(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(content):
            raise ParseError(f"unexpected end of file, expected {what}", len(raw) or 1, 1)
        no, s = content[pos]
        pos += 1
        return no, s

    def peek_word() -> str:
        return content[pos][1].split()[0] if pos < len(content) else ""

    no, s = take("'char <prime>'")
    mt = re.fullmatch(r"char\s+(\d+)", s)
    if not mt:
        raise ParseError("expected 'char <prime>'", no, 1)
    field = PrimeField(int(mt.group(1)))

    no, s = take("'vars <names>'")
    mt = re.fullmatch(r"vars\s+(.+)", s)
    if not mt:
        raise ParseError("expected 'vars <names>'", no, 1)
    names = tuple(mt.group(1).split())
    for nm in names:
        if not _NAME.fullmatch(nm):
            raise ParseError(f"bad variable name {nm!r}", no, 1 + s.index(nm))

    order = "grevlex"
    if peek_word() == "order":
        no, s = take("'order <name>'")
        order = s.split(maxsplit=1)[1].strip() if " " in s else ""
        if order not in ORDER_KEYS:
            raise ParseError(f"unsupported order {order!r}", no, 7)
    base = GradedRing(field, names, order)

    quotient: list[Polynomial] = []
    if peek_word() == "quotient":
        take("'quotient'")
        while True:
            no, s = take("a quotient polynomial or 'end'")
            if s == "end":
                break
            quotient.append(parse_polynomial(base, s, no, 0))
    ring = GradedRing(field, names, order, tuple(quotient)) if quotient else base

    no, s = take("'gens <twists>'")
    if s.split()[0] != "gens":
        raise ParseError("expected 'gens <twists>'", no, 1)
    twists: list[int] = []
    for mt in re.finditer(r"\S+", s[4:]):
        tok = mt.group(0)
        if not re.fullmatch(r"-?\d+", tok):
            raise ParseError(f"bad generator twist {tok!r}", no, 5 + mt.start())
        twists.append(int(tok))
    if not twists:
        raise ParseError("a presentation needs at least one generator twist", no, 1)

    no, s = take("'rels'")
    if s != "rels":
        raise ParseError("expected 'rels'", no, 1)
    n = len(twists)
    columns: list[list[Polynomial]] = []
    while True:
        no, s = take("a relation line or 'end'")
        if s == "end":
            break
        pieces = s.split(",")
        if len(pieces) != n:
            raise ParseError(
                f"expected {n} comma-separated entries, got {len(pieces)}", no, 1
            )
        col: list[Polynomial] = []
        off = 0
        for i, piece in enumerate(pieces):
            entry = parse_polynomial(base, piece, no, off)
            if not entry.is_homogeneous():
                raise NonHomogeneous(
                    f"line {no}, col {off + 1}: entry {i + 1} is not homogeneous"
                )
            col.append(entry)
            off += len(piece) + 1
        if all(e.is_zero() for e in col):
            raise ParseError("relation line is identically zero", no, 1)
        columns.append(col)

    if pos < len(content):
        raise ParseError("unexpected content after final 'end'", content[pos][0], 1)

    matrix = [[columns[j][i] for j in range(len(columns))] for i in range(n)]
    return validate_presentation(ring, tuple(twists), matrix)


def serialize_presentation(pres: GradedPresentation) -> str:
    """Inverse of parse_file, up to whitespace."""
    ring = pres.ring
    out = [
        f"char {ring.field.p}",
        "vars " + " ".join(ring.variables),
        f"order {ring.order}",
    ]
    if ring.is_quotient:
        out.append("quotient")
        out.extend(render_poly(q) for q in ring.quotient_gens)
        out.append("end")
    out.append("gens " + " ".join(str(a) for a in pres.row_twists))
    out.append("rels")
    for j in range(pres.m):
        col = pres.column(j)
        if all(e.is_zero() for e in col):
            raise AlgebraError("cannot serialize a zero column; its degree would be lost")
        out.append(", ".join(render_poly(e) for e in col))
    out.append("end")
    return "\n".join(out) + "\n"


# -- shared output helpers -------------------------------------------------------------


FORMULA_IDS = [
    "sym_dim1_ring_l1",
    "sym_dim1_ring_l2",
    "sym_dim1_ring_l3",
    "fitt_dim1_ring",
    "sym_dim1_module_l1",
    "sym_dim1_module_l2",
    "sym_dim1_module_l3",
    "fitt_dim1_module",
    "uniform_dim1",
    "main",
    "complex",
]


def _render_series(num: dict[int, int]) -> str:
    if not num:
        return "0"
    parts = []
    for e in sorted(num):
        mag = abs(num[e])
        if e == 0:
            body = str(mag)
        else:
            body = ("t" if mag == 1 else f"{mag}*t") + (f"^{e}" if e > 1 else "")
        parts.append(("- " if num[e] < 0 else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _csv_row(report) -> dict[str, object]:
    inst, comp = report.instance, report.computed
    row: dict[str, object] = {
        "seed": inst.get("seed", ""),
        "char": inst["char"],
        "p_vars": len(inst["variables"]),
        "n": len(inst["row_twists"]),
        "m": len(inst["column_degrees"]),
        "regularity": comp["regularity"],
        "dimension": comp["dimension"],
        "codimension": comp["codimension"],
    }
    verdicts = {v["formula"]: v["holds"] for v in report.verdicts}
    applicable = {e["formula"] for e in report.bounds if e["applicable"]}
    for fid in FORMULA_IDS:
        if fid in verdicts:
            row[fid] = "pass" if verdicts[fid] else "fail"
        elif fid in applicable:
            row[fid] = "unchecked"
        else:
            row[fid] = ""
    row["all_hold"] = "pass" if report.all_hold else "fail"
    return row


def _emit_csv(reports) -> None:
    fields = [
        "seed", "char", "p_vars", "n", "m",
        "regularity", "dimension", "codimension",
        *FORMULA_IDS, "all_hold",
    ]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields)
    writer.writeheader()
    for rep in reports:
        writer.writerow(_csv_row(rep))
    sys.stdout.write(buf.getvalue())


def _print_audit(report) -> None:
    inst, comp = report.instance, report.computed
    ring_line = f"char {inst['char']}, vars {' '.join(inst['variables'])}, order {inst['order']}"
    if inst["quotient"]:
        ring_line += ", quotient (" + ", ".join(inst["quotient"]) + ")"
    print("instance:", ring_line)
    print(
        f"module: gens at {tuple(inst['row_twists'])}, "
        f"relations at {tuple(inst['column_degrees'])}"
    )
    print(
        f"computed: reg {comp['regularity']}, dim {comp['dimension']}, "
        f"codim {comp['codimension']}, e {comp['multiplicity']}, cm {comp['is_cm']}"
    )
    verdicts = {v["formula"]: v for v in report.verdicts}
    print(f"{'formula':24} {'value':>12}  verdict")
    for e in report.bounds:
        if not e["applicable"]:
            continue
        v = verdicts.get(e["formula"])
        tail = (
            f"{'pass' if v['holds'] else 'FAIL'} (actual {v['actual']})"
            if v
            else "unchecked"
        )
        print(f"{e['formula']:24} {e['value']:>12}  {tail}")
    print("all bounds hold" if report.all_hold else "BOUND FAILURE")


# -- subcommand handlers ---------------------------------------------------------------


def _cmd_reg(args) -> int:
    pres = parse_file(_read_source(args.file))
    r = regularity(pres)
    _emit(json.dumps({"regularity": r}) if args.json else f"reg = {r}")
    return 0


def _cmd_betti(args) -> int:
    pres = parse_file(_read_source(args.file))
    mi = module_invariants(minimal_presentation(pres))
    table = sorted(mi.betti.items())
    if args.json:
        _emit(json.dumps({
            "betti": [[i, j, v] for (i, j), v in table],
            "regularity": mi.regularity,
        }))
        return 0
    print(f"{'i':>3} {'j':>3} {'count':>6}")
    for (i, j), v in table:
        print(f"{i:>3} {j:>3} {v:>6}")
    print(f"reg = {mi.regularity}")
    return 0


def _cmd_hilbert(args) -> int:
    pres = parse_file(_read_source(args.file))
    hd = hilbert_data(pres)
    payload = {
        "numerator": {str(e): c for e, c in sorted(hd.numerator.items())},
        "dimension": int(hd.dimension),
        "codimension": hd.codimension,
        "multiplicity": hd.multiplicity,
        "length": hd.length,
    }
    if args.json:
        _emit(json.dumps(payload))
        return 0
    print("numerator:", _render_series(hd.numerator))
    print(f"dimension = {int(hd.dimension)}")
    print(f"codimension = {hd.codimension}")
    print(f"multiplicity = {hd.multiplicity}")
    print("length =", hd.length if hd.length is not None else "infinite")
    if hd.length is not None and hd.q_polynomial:
        values = ", ".join(f"{e}:{v}" for e, v in sorted(hd.q_polynomial.items()))
        print("hilbert function:", values)
    return 0


def _cmd_audit(args) -> int:
    pres = parse_file(_read_source(args.file))
    report = audit(pres)
    if args.json:
        _emit(json.dumps(asdict(report)))
    elif args.csv:
        _emit_csv([report])
    else:
        _print_audit(report)
    return 0 if report.all_hold else 2


def _cmd_bounds(args) -> int:
    pres = parse_file(_read_source(args.file))
    report = audit(pres, check=False)
    values: dict[str, object] = {
        e["formula"]: e["value"] for e in report.bounds if e["applicable"]
    }
    pres_min = minimal_presentation(pres)
    a, b = pres_min.row_twists, pres_min.column_degrees
    n, m = pres_min.n, pres_min.m
    comp = report.computed
    c, delta = comp["codimension"], comp["dimension"]
    deg_r, reg_r = comp["ring"]["degree"], comp["ring"]["regularity"]
    if c >= 1 and m >= c + n - 1:
        values["mult_sum"] = multiplicity_bound_sum(a, b, c, deg_r)
        values["mult_series"] = multiplicity_bound_series(a, b, c, deg_r)
    if c >= 1 and m >= c:
        values["mult_binomial"] = multiplicity_bound_binomial(a, b, c, deg_r)
    if c >= 1 and m == c + n - 1:
        values["refined_exact"], _assumed = refined_exact_bound(a, b, c, reg_r)
    if delta >= 2 and m >= c + n:
        values["refined_bracket"] = refined_bracket_bound(a, b, c, delta, reg_r, deg_r)
    payload = {"instance": report.instance, "computed": comp, "bounds": values}
    if n == 1:
        cap = args.B if args.B is not None else degree_cap(a, b)
        payload["ideal"] = ideal_bounds(
            pres.ring.nvars, cap, c=c, n=m, deg_r=deg_r, reg_r=reg_r
        )
    if args.json:
        _emit(json.dumps(payload))
        return 0
    print(f"computed reg = {comp['regularity']}")
    for name, value in values.items():
        print(f"{name:24} {value}")
    for name, value in payload.get("ideal", {}).items():
        print(f"ideal.{name:18} {value}")
    return 0


def _cmd_sym(args) -> int:
    pres = minimal_presentation(parse_file(_read_source(args.file)))
    power = sym_power(pres, args.l)
    r = regularity(power) if not power.is_zero_module else None
    payload = {
        "l": args.l,
        "generators": power.n,
        "relations": power.m,
        "row_twists": list(power.row_twists),
        "regularity": r,
    }
    if args.json:
        _emit(json.dumps(payload))
        return 0
    print(f"Sym^{args.l}: {power.n} generators, {power.m} relations")
    print(f"reg = {r}")
    return 0


def _cmd_fitt(args) -> int:
    pres = minimal_presentation(parse_file(_read_source(args.file)))
    minors = fitting_ideal_0(pres)
    if minors:
        quotient = validate_presentation(pres.ring, (0,), [minors])
        r = regularity(quotient)
    else:
        r = ring_invariants(pres.ring)[2]  # zero ideal: the quotient is R itself
    payload = {
        "generators": [render_poly(g) for g in minors],
        "regularity_of_quotient": r,
    }
    if args.json:
        _emit(json.dumps(payload))
        return 0
    print(f"fitting ideal: {len(minors)} generators")
    for g in minors:
        print(" ", render_poly(g))
    print(f"reg(R/Fitt) = {r}")
    return 0


def _cmd_complex(args) -> int:
    pres = minimal_presentation(parse_file(_read_source(args.file)))
    terms = complex_terms(pres.row_twists, pres.column_degrees, args.l)
    dim_r, _deg_r, reg_r, _cm = ring_invariants(pres.ring)
    delta = int(hilbert_data(pres).dimension)
    bound = complex_regularity_bound(terms, reg_r, dim_r) if delta <= 1 else None
    payload = {
        "l": args.l,
        "terms": [
            {"position": t.position, "label": t.label, "twists": list(t.twists)}
            for t in terms
        ],
        "bound": bound,
    }
    if args.json:
        _emit(json.dumps(payload))
        return 0
    print(f"{'pos':>4} {'label':16} rank  twists")
    for t in terms:
        print(f"{t.position:>4} {t.label:16} {t.rank:>4}  {tuple(t.twists)}")
    if bound is not None:
        print(f"regularity bound = {bound}")
    else:
        print("regularity bound not applicable (module dimension > 1)")
    return 0


def _cmd_section_check(args) -> int:
    if len(args.linear) != 1:
        print("error: section-check takes exactly one --linear", file=sys.stderr)
        return 1
    pres = parse_file(_read_source(args.file))
    form = parse_polynomial(pres.ring.base, args.linear[0])
    report = section_check(pres, form)
    if args.json:
        _emit(json.dumps(asdict(report)))
        return 0 if report.all_hold else 2
    print(f"form: {report.form}, torsion length {report.colon_length}")
    print(f"{'mu':>4} {'torsion>=mu':>12} {'section count':>14}")
    for mu, lhs, rhs in report.identity_rows:
        print(f"{mu:>4} {lhs:>12} {rhs:>14}")
    print(f"identity (cumulative): {'pass' if report.identity_cumulative else 'FAIL'}")
    print(f"identity (per degree): {'pass' if report.identity_per_degree else 'FAIL'}")
    print(f"window estimate:       {'pass' if report.upper_estimate else 'FAIL'}")
    print(
        f"tail bound at mu*={report.mu_star}:  "
        f"{'pass' if report.tail_bound else 'FAIL'}"
    )
    return 0 if report.all_hold else 2


def _cmd_tower(args) -> int:
    pres = parse_file(_read_source(args.file))
    forms = [parse_polynomial(pres.ring.base, text) for text in args.linear]
    report = tower_check(pres, forms)
    if args.json:
        _emit(json.dumps(asdict(report)))
        return 0 if report.all_hold else 2
    print(f"{'i':>3} {'form':12} {'reg':>5} {'torsion':>8} {'Q':>5}")
    for i, form in enumerate(report.forms):
        print(
            f"{i:>3} {form:12} {report.regularities[i]:>5} "
            f"{report.colon_lengths[i]:>8} {report.q_values[i]:>5}"
        )
    for i, ok in enumerate(report.chain_holds):
        print(f"Q_{i} <= Q_{i + 1}^2: {'pass' if ok else 'FAIL'}")
    print(
        f"reg(M) <= Q_s^(2^s) = {report.final_bound}: "
        f"{'pass' if report.final_holds else 'FAIL'}"
    )
    return 0 if report.all_hold else 2


def _random_trial(seed: int, trial: int, order: str):
    """Deterministic (shape, module) for one trial of a batch run."""
    shape_rng = random.Random(f"cmreg-shape-{seed}-{trial}")
    params = dict(
        p_vars=shape_rng.randint(1, 3),
        n=shape_rng.randint(1, 3),
        m=shape_rng.randint(1, 5),
        max_a=2,
        max_b=4,
        density=0.4 + 0.6 * shape_rng.random(),
        order=order,
    )
    instance_seed = shape_rng.randrange(2**32)
    pres = random_module(instance_seed, **params)
    return pres, {"seed": seed, "trial": trial, **params}


def _cmd_random(args) -> int:
    if not args.audit:
        if args.trials != 1:
            print("error: --trials above 1 requires --audit", file=sys.stderr)
            return 1
        pres, _info = _random_trial(args.seed, 0, args.order)
        _emit(serialize_presentation(pres))
        return 0
    reports = []
    for trial in range(args.trials):
        pres, info = _random_trial(args.seed, trial, args.order)
        reports.append(audit(pres, instance=info))
    if args.json:
        _emit(json.dumps([asdict(r) for r in reports]))
    elif args.csv:
        _emit_csv(reports)
    else:
        for rep in reports:
            inst = rep.instance
            status = "pass" if rep.all_hold else "FAIL"
            print(
                f"trial {inst['trial']:>3}: vars {len(inst['variables'])}, "
                f"gens {len(inst['row_twists'])}, rels {len(inst['column_degrees'])}, "
                f"reg {rep.computed['regularity']} -> {status}"
            )
    return 0 if all(r.all_hold for r in reports) else 2


def _cmd_mayr_meyer(args) -> int:
    _emit(serialize_presentation(mayr_meyer(args.l)))
    return 0


# -- argument plumbing -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for failed bounds."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cmreg", description="regularity bounds, audited")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, *, file_arg=True, help=""):
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler)
        if file_arg:
            p.add_argument("file", help="module file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("reg", _cmd_reg, help="Castelnuovo-Mumford regularity")
    add("betti", _cmd_betti, help="graded Betti table")
    add("hilbert", _cmd_hilbert, help="Hilbert series data")

    p = add("audit", _cmd_audit, help="every applicable bound vs computed values")
    p.add_argument("--csv", action="store_true", help="one CSV row per audit")

    p = add("bounds", _cmd_bounds, help="bound values only, no verdicts")
    p.add_argument("--B", type=int, default=None, help="degree cap for the ideal table")

    p = add("sym", _cmd_sym, help="symmetric power of the module")
    p.add_argument("--l", type=int, default=1, help="power (default 1)")

    add("fitt", _cmd_fitt, help="0-th Fitting ideal and its quotient")

    p = add("complex", _cmd_complex, help="two-sided approximation complex terms")
    p.add_argument("--l", type=int, default=1, help="power (default 1)")

    p = add("section-check", _cmd_section_check, help="torsion vs sections identities")
    p.add_argument("--linear", action="append", required=True, help="linear form")

    p = add("tower", _cmd_tower, help="squaring recursion along a quotient tower")
    p.add_argument("--linear", action="append", required=True,
                   help="linear form (repeat per level)")

    p = add("random", _cmd_random, file_arg=False, help="seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--audit", action="store_true", help="audit instead of printing")
    p.add_argument("--csv", action="store_true", help="one CSV row per trial")
    p.add_argument("--order", choices=sorted(ORDER_KEYS), default="grevlex")

    p = add("mayr-meyer", _cmd_mayr_meyer, file_arg=False,
            help="doubly exponential worst-case ideal")
    p.add_argument("--l", type=int, default=1, help="level (1 or 2)")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (AlgebraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
