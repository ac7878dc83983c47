"""Problem instances and deterministic report building for the CLI.

Rationals are serialized as "num/den" strings (bare integers when the
denominator is 1) and every list is emitted in a fixed order, so identical
inputs produce byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

from .cyclotomic import CyclotomicInteger
from .dynamics import Orbit, PrimeContext, is_p_stable, orbit_decomposition
from .errors import InvalidInstanceError
from .lattice import ExponentMatrix, fundamental_domain, weight_denominator
from .lfunction import (
    DEFAULT_BUDGET,
    LPolynomial,
    character_sums,
    l_polynomial,
    newton_polygon_of_polynomial,
    torus_size,
)
from .polygons import (
    LowerPolygon,
    compare_polygons,
    hodge_polygon,
    newton_polygon_from_orbits,
)
from .primes import primes_between

#: Extra power sums computed past the polynomial degree to certify truncation.
DEGREE_SLACK = 2


@dataclass(frozen=True)
class ProblemInstance:
    """One (prime, exponent matrix) problem, as read from a JSON document."""

    p: int
    rows: tuple[tuple[int, ...], ...]
    budget: int | None = None

    def matrix(self) -> ExponentMatrix:
        return ExponentMatrix(self.rows)

    def context(self) -> PrimeContext:
        return PrimeContext(self.p, self.matrix())

    def echo(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"p": self.p, "matrix": [list(r) for r in self.rows]}
        if self.budget is not None:
            doc["budget"] = self.budget
        return doc


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstanceError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidInstanceError("instance document must be a JSON object")
    return doc


def parse_matrix(doc: dict) -> tuple[tuple[int, ...], ...]:
    rows = doc.get("matrix")
    if not isinstance(rows, list) or not rows:
        raise InvalidInstanceError('"matrix" must be a non-empty array of rows')
    n = len(rows)
    out = []
    for row in rows:
        if (
            not isinstance(row, list)
            or len(row) != n
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in row)
        ):
            raise InvalidInstanceError('"matrix" must be square with integer entries')
        out.append(tuple(row))
    return tuple(out)


def parse_instance(doc: dict) -> ProblemInstance:
    rows = parse_matrix(doc)
    p = doc.get("p")
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise InvalidInstanceError('"p" must be an integer >= 2')
    budget = doc.get("budget")
    if budget is not None and (
        not isinstance(budget, int) or isinstance(budget, bool) or budget < 1
    ):
        raise InvalidInstanceError('"budget" must be a positive integer')
    return ProblemInstance(p=p, rows=rows, budget=budget)


def format_rational(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def polygon_payload(poly: LowerPolygon) -> dict[str, Any]:
    return {
        "vertices": [[format_rational(x), format_rational(y)] for x, y in poly.vertices],
        "slopes": [format_rational(s) for s in poly.slopes()],
    }


def _orbit_payload(orbit: Orbit) -> dict[str, Any]:
    return {
        "points": [list(pt.u) for pt in orbit.points],
        "length": orbit.length,
        "slope_sum": format_rational(orbit.slope_sum),
    }


def _zeta_payload(value: CyclotomicInteger) -> dict[str, Any]:
    return {"zeta_coeffs": list(value.coeffs), "text": str(value)}


def analyze_report(instance: ProblemInstance) -> dict[str, Any]:
    """Theoretical pipeline: domain, orbits, stability, both polygons."""
    ctx = instance.context()
    matrix = ctx.matrix
    domain = fundamental_domain(matrix)
    orbits = orbit_decomposition(ctx)
    stable, witness = is_p_stable(ctx)
    hp = hodge_polygon(matrix)
    np_poly = newton_polygon_from_orbits(ctx)
    cmp_result = compare_polygons(np_poly, hp)
    return {
        "instance": instance.echo(),
        "det": matrix.det,
        "domain_size": len(domain),
        "weight_denominator": weight_denominator(matrix),
        "fundamental_domain": [
            {
                "u": list(pt.u),
                "coords": [format_rational(c) for c in pt.coords],
                "weight": format_rational(pt.weight),
            }
            for pt in domain
        ],
        "orbits": [_orbit_payload(o) for o in orbits],
        "stable": stable,
        "witness": list(witness.u) if witness is not None else None,
        "hodge_polygon": polygon_payload(hp),
        "newton_polygon": polygon_payload(np_poly),
        "comparison": {
            "verdict": cmp_result.verdict,
            "shared_endpoints": cmp_result.shared_endpoints,
            "endpoint": [
                format_rational(cmp_result.first_end[0]),
                format_rational(cmp_result.first_end[1]),
            ],
            "max_gap": format_rational(cmp_result.max_gap),
        },
    }


def _l_polynomial_payload(poly: LPolynomial) -> dict[str, Any]:
    return {
        "degree": poly.degree,
        "exponent_sign": poly.exponent_sign,
        "coefficients": [_zeta_payload(c) for c in poly.coeffs],
    }


def verify_report(instance: ProblemInstance, budget: int) -> tuple[dict[str, Any], int]:
    """Theoretical report plus the empirical section; returns (report, exit code).

    Exit codes: 0 on polygon match, 3 on mismatch, 4 when the largest
    required torus would blow the evaluation budget (the empirical section
    is then omitted and a budget report included instead).
    """
    report = analyze_report(instance)
    ctx = instance.context()
    degree = abs(ctx.matrix.det)
    needed = degree + DEGREE_SLACK
    worst = torus_size(ctx.p, needed, ctx.matrix.n)
    if worst > budget:
        report["budget_exceeded"] = {
            "field_degree": needed,
            "torus_points": worst,
            "budget": budget,
        }
        return report, 4

    sums = character_sums(ctx, needed, budget=budget)
    poly = l_polynomial(ctx, sums)
    empirical = newton_polygon_of_polynomial(poly)
    theoretical = newton_polygon_from_orbits(ctx)
    match = empirical == theoretical
    report["empirical"] = {
        "budget": budget,
        "power_sums": [_zeta_payload(s) for s in sums],
        "l_polynomial": _l_polynomial_payload(poly),
        "newton_polygon": polygon_payload(empirical),
        "match": match,
    }
    return report, 0 if match else 3


def scan_rows(matrix: ExponentMatrix, p_min: int, p_max: int) -> list[dict[str, Any]]:
    """Stability verdict and maximal polygon gap for every coprime prime in range."""
    rows = []
    for p in primes_between(p_min, p_max):
        if gcd(p, matrix.det) != 1:
            continue
        ctx = PrimeContext(p, matrix)
        stable, _ = is_p_stable(ctx)
        cmp_result = compare_polygons(newton_polygon_from_orbits(ctx), hodge_polygon(matrix))
        rows.append(
            {"p": p, "stable": stable, "max_gap": format_rational(cmp_result.max_gap)}
        )
    return rows


def resolve_budget(instance_budget: int | None, flag_budget: int | None, env_budget: int | None) -> int:
    """Budget precedence: CLI flag, then instance field, then environment, then default."""
    for candidate in (flag_budget, instance_budget, env_budget):
        if candidate is not None:
            return candidate
    return DEFAULT_BUDGET


# --- human-readable rendering -------------------------------------------------


def _polygon_line(name: str, payload: dict[str, Any]) -> str:
    verts = " ".join(f"({x},{y})" for x, y in payload["vertices"])
    slopes = " ".join(payload["slopes"])
    return f"{name}: vertices {verts} slopes [{slopes}]"


def render_analyze_text(report: dict[str, Any]) -> str:
    inst = report["instance"]
    lines = [
        f"instance: p={inst['p']} matrix={inst['matrix']}",
        f"det={report['det']} domain_size={report['domain_size']}"
        f" weight_denominator={report['weight_denominator']}",
        "fundamental_domain:",
    ]
    for entry in report["fundamental_domain"]:
        u = ",".join(str(x) for x in entry["u"])
        r = ",".join(entry["coords"])
        lines.append(f"  u=({u}) r=({r}) w={entry['weight']}")
    lines.append("orbits:")
    for orbit in report["orbits"]:
        path = "->".join("(" + ",".join(str(x) for x in pt) + ")" for pt in orbit["points"])
        lines.append(f"  length={orbit['length']} slope_sum={orbit['slope_sum']} points={path}")
    witness = report["witness"]
    witness_text = "none" if witness is None else "(" + ",".join(str(x) for x in witness) + ")"
    lines.append(f"stable={str(report['stable']).lower()} witness={witness_text}")
    lines.append(_polygon_line("hodge_polygon", report["hodge_polygon"]))
    lines.append(_polygon_line("newton_polygon", report["newton_polygon"]))
    cmp_payload = report["comparison"]
    lines.append(
        f"comparison: {cmp_payload['verdict']}"
        f" shared_endpoints={str(cmp_payload['shared_endpoints']).lower()}"
        f" endpoint=({cmp_payload['endpoint'][0]},{cmp_payload['endpoint'][1]})"
        f" max_gap={cmp_payload['max_gap']}"
    )
    return "\n".join(lines) + "\n"


def render_verify_text(report: dict[str, Any]) -> str:
    text = render_analyze_text(report)
    if "budget_exceeded" in report:
        info = report["budget_exceeded"]
        text += (
            f"budget_exceeded: field_degree={info['field_degree']}"
            f" torus_points={info['torus_points']} budget={info['budget']}\n"
        )
        return text
    emp = report["empirical"]
    sums_text = " ".join(
        f"S_{i + 1}={entry['text']}" for i, entry in enumerate(emp["power_sums"])
    )
    text += f"power_sums: {sums_text}\n"
    coeff_text = " ".join(entry["text"] for entry in emp["l_polynomial"]["coefficients"])
    text += f"l_polynomial: degree={emp['l_polynomial']['degree']} coefficients: {coeff_text}\n"
    text += _polygon_line("empirical_newton_polygon", emp["newton_polygon"]) + "\n"
    text += f"verification: match={str(emp['match']).lower()}\n"
    return text


def render_scan_tsv(rows: list[dict[str, Any]]) -> str:
    return "".join(
        f"{row['p']}\t{str(row['stable']).lower()}\t{row['max_gap']}\n" for row in rows
    )
