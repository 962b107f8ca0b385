"""Stable text and JSON formats for every value the CLI exchanges.

All emitters are deterministic (sorted terms, sorted keys) and every
parser round-trips its emitter bit-exactly. Coefficients travel as decimal
strings (``n`` or ``n/d``) so arbitrary precision survives JSON.
"""

from __future__ import annotations

import re

from .algebra import Domain, LaurentPoly, domain_from_name, ZZ
from .annihilator import AnnihilatorResult
from .configuration import Patch, Pattern, Shape, TorusConfig
from .errors import InputFormatError
from .linestructure import EliminationReport, LineDecomposition, PeriodicityVerdict
from .sft import BudgetSpent, Decision, SftSpec


# -- polynomials ----------------------------------------------------------

_TERM_RE = re.compile(
    r"^(?P<coeff>\d+(?:/\d+)?)?"
    r"(?:\*?(?P<xpart>x(?:\^(?P<xe>~?\d+))?))?"
    r"(?:\*?(?P<ypart>y(?:\^(?P<ye>~?\d+))?))?$"
)


def poly_to_text(f: LaurentPoly) -> str:
    return str(f)


def poly_from_text(text: str, domain: Domain = ZZ) -> LaurentPoly:
    """Parse ``c*x^a*y^b`` sums; exponent minus signs ride behind '^'."""
    s = text.strip().replace("^-", "^~").replace(" ", "")
    if not s:
        raise InputFormatError("empty polynomial text")
    if s == "0":
        return LaurentPoly.zero(domain)
    chunks = re.split(r"([+-])", s)
    if chunks[0] == "":
        chunks = chunks[1:]
    else:
        chunks = ["+"] + chunks
    if len(chunks) % 2 != 0:
        raise InputFormatError(f"cannot parse polynomial {text!r}")
    terms: dict[tuple[int, int], object] = {}
    from fractions import Fraction

    for sign, body in zip(chunks[::2], chunks[1::2]):
        m = _TERM_RE.match(body)
        if not m or not body:
            raise InputFormatError(f"cannot parse term {body!r} in {text!r}")
        coeff = m.group("coeff")
        if coeff is None:
            if not (m.group("xpart") or m.group("ypart")):
                raise InputFormatError(f"cannot parse term {body!r} in {text!r}")
            c = Fraction(1)
        elif "/" in coeff:
            num, den = coeff.split("/")
            c = Fraction(int(num), int(den))
        else:
            c = Fraction(int(coeff))
        if sign == "-":
            c = -c

        def exp(raw):
            if raw is None:
                return 1
            return -int(raw[1:]) if raw.startswith("~") else int(raw)

        a = exp(m.group("xe")) if m.group("xpart") else 0
        b = exp(m.group("ye")) if m.group("ypart") else 0
        terms[(a, b)] = terms.get((a, b), Fraction(0)) + c
    try:
        return LaurentPoly(domain, terms)
    except (ValueError, TypeError) as e:
        raise InputFormatError(str(e)) from e


def poly_to_json(f: LaurentPoly) -> dict:
    return {
        "domain": f.domain.name,
        "terms": [[e[0], e[1], f.domain.format_coeff(c)] for e, c in sorted(f.terms.items())],
    }


def poly_from_json(data: dict) -> LaurentPoly:
    try:
        domain = domain_from_name(data["domain"])
        terms = {(int(a), int(b)): domain.parse_coeff(c) for a, b, c in data["terms"]}
        return LaurentPoly(domain, terms)
    except (KeyError, ValueError, TypeError) as e:
        raise InputFormatError(f"bad polynomial JSON: {e}") from e


# -- shapes and grids -----------------------------------------------------


def shape_to_json(shape: Shape) -> list:
    return [[c[0], c[1]] for c in shape.cells]


def shape_from_json(data) -> Shape:
    try:
        return Shape((int(a), int(b)) for a, b in data)
    except (ValueError, TypeError) as e:
        raise InputFormatError(f"bad shape JSON: {e}") from e


def parse_shape_spec(spec: str) -> Shape:
    """Shape shorthand: ``rect:NxM`` or ``plus`` (file contents go through
    shape_from_json)."""
    if spec == "plus":
        return Shape.plus()
    m = re.match(r"^rect:(\d+)x(\d+)$", spec)
    if m:
        return Shape.rectangle(int(m.group(1)), int(m.group(2)))
    raise InputFormatError(f"unknown shape spec {spec!r}")


def grid_to_text(rows) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in rows) + "\n"


def grid_from_text(text: str) -> list[list[int]]:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as e:
            raise InputFormatError(f"bad grid line {line!r}") from e
    if not rows:
        raise InputFormatError("empty grid")
    return rows


def source_to_json(source) -> dict:
    if isinstance(source, TorusConfig):
        return {
            "kind": "torus",
            "k": source.k,
            "l": source.l,
            "values": [list(row) for row in source.rows],
        }
    return {
        "kind": "patch",
        "origin": [source.origin[0], source.origin[1]],
        "values": [list(row) for row in source.rows],
    }


def source_from_json(data) -> Patch | TorusConfig:
    try:
        if data["kind"] == "torus":
            return TorusConfig(data["values"])
        if data["kind"] == "patch":
            origin = data.get("origin", [0, 0])
            return Patch((origin[0], origin[1]), data["values"])
    except (KeyError, ValueError, TypeError) as e:
        raise InputFormatError(f"bad grid JSON: {e}") from e
    raise InputFormatError(f"unknown grid kind {data.get('kind')!r}")


# -- sft specs and decisions ----------------------------------------------


def sft_spec_to_json(spec: SftSpec) -> dict:
    return {
        "shape": shape_to_json(spec.shape),
        "alphabet": sorted(spec.alphabet),
        "allowed": sorted(list(p.values) for p in spec.allowed),
    }


def sft_spec_from_json(data) -> SftSpec:
    try:
        shape = shape_from_json(data["shape"])
        alphabet = data["alphabet"]
        allowed = {Pattern(shape, tuple(values)) for values in data["allowed"]}
        return SftSpec(shape, alphabet, allowed)
    except (KeyError, ValueError, TypeError) as e:
        raise InputFormatError(f"bad SFT spec JSON: {e}") from e


def budget_spent_to_json(spent: BudgetSpent | None) -> dict | None:
    if spent is None:
        return None
    return {
        "nodes": spent.nodes,
        "windows_tried": list(spent.windows_tried),
        "tori_tried": [list(t) for t in spent.tori_tried],
    }


def decision_to_json(decision: Decision) -> dict:
    return {
        "decision": decision.kind,
        "window": decision.window,
        "witness": source_to_json(decision.witness) if decision.witness else None,
        "budget_spent": budget_spent_to_json(decision.budget_spent),
    }


# -- analysis reports -----------------------------------------------------


def annihilator_result_to_json(result: AnnihilatorResult) -> dict:
    return {
        "kind": result.kind,
        "poly": poly_to_json(result.poly),
        "periodizer": poly_to_json(result.periodizer) if result.periodizer else None,
        "constant": str(result.constant) if result.constant is not None else None,
    }


def annihilator_result_from_json(data) -> AnnihilatorResult:
    try:
        constant = data.get("constant")
        return AnnihilatorResult(
            kind=data["kind"],
            poly=poly_from_json(data["poly"]),
            periodizer=poly_from_json(data["periodizer"]) if data.get("periodizer") else None,
            constant=int(constant) if constant is not None else None,
        )
    except (KeyError, ValueError, TypeError) as e:
        raise InputFormatError(f"bad annihilator JSON: {e}") from e


def verdict_to_json(verdict: PeriodicityVerdict) -> dict:
    return {
        "verdict": verdict.kind,
        "direction": list(verdict.direction) if verdict.direction else None,
        "order_upper_bound": verdict.order_upper_bound,
    }


def decomposition_to_json(decomp: LineDecomposition) -> dict:
    return {
        "monomial": list(decomp.monomial),
        "factors": [
            {"direction": list(d), "poly": poly_to_json(p)} for d, p in decomp.factors
        ],
        "remainder": poly_to_json(decomp.remainder),
    }


def elimination_report_to_json(report: EliminationReport) -> dict:
    return {
        "per_variable": [
            {
                "variable": e.variable,
                "resultant": poly_to_json(e.resultant) if e.resultant is not None else None,
                "nonzero": e.nonzero,
                "axis": list(e.axis),
            }
            for e in report.entries
        ],
        "verdict": report.verdict,
        "direction": list(report.direction) if report.direction else None,
    }
