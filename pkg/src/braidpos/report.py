"""Analysis reports shared by the CLI and the HTTP service.

Reports are plain dicts with a fixed key order and ``"schema": 1``, so
identical inputs serialize to identical bytes.  Laurent polynomials
serialize as ``[coefficient, exponent]`` pairs sorted by exponent.
Every numeric field is reproducible by rerunning the named operation on
the echoed input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from . import legendrian
from .braids import (
    BraidWord,
    closure_stats,
    expand_sqp,
    sqp_surface_stats,
    torus_braid,
)
from .classifier import ClassifierConfig, Verdict, classify, tau_certificate
from .errors import InternalConsistencyError
from .expressions import BraidClosure, IteratedTorus, Torus, TwistKnot
from .grammar import format_braid, format_expression, parse_braid, parse_expression_text
from .invariants import (
    alexander_burau,
    alexander_seifert,
    fox_milnor_necessary,
    fox_milnor_twist_family,
    seifert_matrix,
    signature,
)
from .laurent import LaurentPoly
from .sampling import (
    random_band_factorization,
    random_expression,
    random_knot_word,
    random_qp_factorization,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ReportOptions:
    enable_conjectural: bool = False
    tb_table: Mapping[str, tuple[int, str]] | None = None

    def to_config(self) -> ClassifierConfig:
        if self.tb_table is None:
            return ClassifierConfig(enable_conjectural=self.enable_conjectural)
        return ClassifierConfig(
            enable_conjectural=self.enable_conjectural, tb_table=dict(self.tb_table)
        )


def _laurent_pairs(poly: LaurentPoly) -> list[list[int]]:
    return [[coeff, exp] for exp, coeff in poly.items()]


def braid_report(text: str, options: ReportOptions | None = None) -> dict:
    """Full invariant report for a braid word given as text."""
    options = options or ReportOptions()
    parsed = parse_braid(text)
    word = parsed.word
    stats = closure_stats(word)
    report: dict = {
        "schema": SCHEMA_VERSION,
        "kind": "braid",
        "input": text,
        "word": {
            "strands": word.strands,
            "letters": list(word.letters),
            "canonical": format_braid(word),
        },
        "components": stats.component_count,
        "writhe": stats.writhe,
        "is_knot": stats.component_count == 1,
    }
    warnings: list[str] = []
    if stats.component_count != 1:
        report.update(
            {
                "legendrian": None,
                "alexander": None,
                "alexander_str": None,
                "signature": None,
                "determinant": None,
                "fox_milnor_necessary": None,
                "verdict": None,
            }
        )
        warnings.append(
            f"closure has {stats.component_count} components; knot invariants skipped"
        )
        report["warnings"] = warnings
        return report

    front = legendrian.legendrianize(word)
    delta = alexander_burau(word)
    matrix = seifert_matrix(word)
    delta_check = alexander_seifert(matrix)
    if delta != delta_check:
        raise InternalConsistencyError(
            f"Alexander routes disagree: Burau gives {delta}, Seifert gives {delta_check}"
        )
    det = abs(delta.evaluate_unit(-1))
    closure = BraidClosure(word, bands=parsed.bands)
    verdict = classify(closure, options.to_config())
    warnings.extend(verdict.warnings)
    if "R-ALT" in verdict.rules_used():
        warnings.append(
            "alternating rule uses tau = -sigma/2 under this signature convention "
            "(sigma of the right-handed trefoil is -2)"
        )
    report.update(
        {
            "legendrian": {
                "tb": front.tb,
                "rot_abs": front.rot_abs,
                "left_cusps": front.left_cusps,
                "bennequin_sum": front.tb + front.rot_abs,
                "slice_genus_lower_bound": legendrian.slice_genus_lower_bound(word),
                "tau_lower_bound": legendrian.tau_lower_bound(word),
            },
            "alexander": _laurent_pairs(delta),
            "alexander_str": str(delta),
            "signature": signature(matrix),
            "determinant": det,
            "fox_milnor_necessary": fox_milnor_necessary(delta),
            "verdict": verdict.to_json(),
            "warnings": warnings,
        }
    )
    return report


def expression_report(text: str, options: ReportOptions | None = None) -> dict:
    """Classifier report for a knot expression given as text."""
    options = options or ReportOptions()
    expr = parse_expression_text(text)
    verdict = classify(expr, options.to_config())
    warnings = list(verdict.warnings)
    if "R-ALT" in verdict.rules_used():
        warnings.append(
            "alternating rule uses tau = -sigma/2 under this signature convention "
            "(sigma of the right-handed trefoil is -2)"
        )
    report: dict = {
        "schema": SCHEMA_VERSION,
        "kind": "expression",
        "input": text,
        "expression": format_expression(expr),
        "verdict": verdict.to_json(),
        "warnings": warnings,
    }
    if isinstance(expr, BraidClosure):
        report["braid"] = braid_report(format_braid(expr.word), options)
    return report


# ---------------------------------------------------------------------------
# Self-test


def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def selftest_report(options: ReportOptions | None = None) -> dict:
    """Built-in cross-checks: frozen anchors, oracle equivalence, identities,
    and verdict-chain fuzzing.  Deterministic (fixed seed)."""
    options = options or ReportOptions()
    config = options.to_config()
    rng = random.Random(2024)
    checks: list[dict] = []

    trefoil = BraidWord(2, (1, 1, 1))
    figure8 = BraidWord(3, (1, -2, 1, -2))
    delta_trefoil = alexander_burau(trefoil)
    delta_fig8 = alexander_burau(figure8)
    checks.append(
        _check(
            "anchors",
            delta_trefoil == LaurentPoly({1: 1, 0: -1, -1: 1})
            and delta_fig8 == LaurentPoly({1: -1, 0: 3, -1: -1})
            and signature(seifert_matrix(trefoil)) == -2
            and signature(seifert_matrix(figure8)) == 0
            and legendrian.legendrianize(trefoil).tb == 1,
            "trefoil and figure-eight polynomial, signature, and tb anchors",
        )
    )

    torus_ok = True
    for p, q in ((2, 3), (2, 5), (3, 4), (3, 5), (4, 5)):
        expected = (p - 1) * (q - 1) // 2
        derived = tau_certificate(Torus(p, q), config)
        torus_ok &= derived is not None and derived[0] == expected
        torus_ok &= legendrian.slice_genus_lower_bound(torus_braid(p, q)) == expected
    checks.append(_check("torus_table", torus_ok, "tau and sharp bound for small torus knots"))

    oracle_ok = True
    for _ in range(60):
        word = random_knot_word(rng)
        if alexander_burau(word) != alexander_seifert(seifert_matrix(word)):
            oracle_ok = False
            break
    checks.append(
        _check("alexander_oracle", oracle_ok, "Burau and Seifert routes agree on 60 random knots")
    )

    qp_ok = True
    for _ in range(60):
        factorization = random_qp_factorization(rng)
        from .braids import expand_qp

        word = expand_qp(factorization)
        if legendrian.bennequin_sum(word) != -factorization.strands + len(factorization):
            qp_ok = False
            break
    checks.append(
        _check("qp_bennequin", qp_ok, "tb + |rot| = -b + m on 60 random conjugate presentations")
    )

    sqp_ok = True
    for _ in range(60):
        factorization = random_band_factorization(rng)
        genus = sqp_surface_stats(factorization).genus
        word = expand_sqp(factorization)
        from .expressions import braid_closure_from_bands

        verdict = classify(braid_closure_from_bands(factorization), config)
        if not (
            genus == legendrian.slice_genus_lower_bound(word) == verdict.tau == verdict.genus
        ):
            sqp_ok = False
            break
    checks.append(
        _check(
            "sqp_triple",
            sqp_ok,
            "surface genus = bound = classifier tau on 60 random band presentations",
        )
    )

    twist_ok = True
    for n in range(1, 21):
        verdict = classify(TwistKnot(n), config)
        expected = "unknown" if fox_milnor_twist_family(n) else "yes"
        twist_ok &= verdict.tau == 0 and verdict.not_qp == expected
    checks.append(_check("twist_suite", twist_ok, "twist knots: tau = 0 and N4 firing pattern"))

    chain_ok = True
    detail = "no chain or tau/g4 violations in 150 random expressions"
    for _ in range(150):
        expr = random_expression(rng)
        try:
            verdict = classify(expr, config)
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            chain_ok = False
            detail = f"classify failed on {format_expression(expr)}: {exc}"
            break
        if not verdict_chain_ok(verdict):
            chain_ok = False
            detail = f"chain violation on {format_expression(expr)}"
            break
    checks.append(_check("chain_fuzz", chain_ok, detail))

    cable_verdict = classify(IteratedTorus(((2, 1), (2, 0))), config)
    checks.append(
        _check(
            "cable_example",
            cable_verdict.sqp == "yes" and cable_verdict.tau == 2 and cable_verdict.genus == 2,
            "(2,1)-cable of the trefoil: strongly quasipositive with tau = g = 2",
        )
    )

    return {
        "schema": SCHEMA_VERSION,
        "kind": "selftest",
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def verdict_chain_ok(verdict: Verdict) -> bool:
    """Inclusion-chain and |tau| <= g4 invariants of a verdict."""
    order = ("positive_braid", "positive", "sqp", "qp")
    values = [verdict.flag(key) for key in order]
    for lower, upper in zip(values, values[1:]):
        if lower == "yes" and upper != "yes":
            return False
        if upper == "no" and lower != "no":
            return False
    if verdict.qp == "yes" and verdict.not_qp == "yes":
        return False
    if verdict.not_qp == "yes" and (verdict.sqp != "no" or verdict.positive_braid != "no"):
        return False
    if verdict.tau is not None and verdict.g4 is not None and abs(verdict.tau) > verdict.g4:
        return False
    return True


# ---------------------------------------------------------------------------
# Plain-text rendering


def render_text(report: dict) -> str:
    kind = report.get("kind")
    if kind == "braid":
        return _render_braid(report)
    if kind == "expression":
        return _render_expression(report)
    if kind == "selftest":
        return _render_selftest(report)
    raise InternalConsistencyError(f"unknown report kind {kind!r}")


def _render_braid(report: dict) -> str:
    lines = [
        f"input:        {report['input']}",
        f"word:         {report['word']['canonical']}",
        f"components:   {report['components']}",
        f"writhe:       {report['writhe']}",
    ]
    if report["is_knot"]:
        front = report["legendrian"]
        lines += [
            f"tb:           {front['tb']}",
            f"|rot|:        {front['rot_abs']}",
            f"tb + |rot|:   {front['bennequin_sum']}",
            f"g4 bound:     >= {front['slice_genus_lower_bound']}",
            f"tau bound:    >= {front['tau_lower_bound']}",
            f"alexander:    {report['alexander_str']}",
            f"determinant:  {report['determinant']}",
            f"signature:    {report['signature']}",
            f"fox-milnor:   {'passes' if report['fox_milnor_necessary'] else 'obstructed'}",
        ]
        lines += _render_verdict(report["verdict"])
    lines += [f"warning:      {w}" for w in report.get("warnings", [])]
    return "\n".join(lines)


def _render_expression(report: dict) -> str:
    lines = [
        f"input:        {report['input']}",
        f"expression:   {report['expression']}",
    ]
    lines += _render_verdict(report["verdict"])
    lines += [f"warning:      {w}" for w in report.get("warnings", [])]
    if "braid" in report:
        lines.append("")
        lines.append("closure invariants:")
        lines += ["  " + line for line in _render_braid(report["braid"]).splitlines()]
    return "\n".join(lines)


def _render_verdict(verdict: dict) -> list[str]:
    flags = "; ".join(
        f"{label}: {verdict[key]}"
        for label, key in (
            ("positive braid", "positive_braid"),
            ("positive", "positive"),
            ("strongly quasipositive", "sqp"),
            ("quasipositive", "qp"),
            ("not quasipositive", "not_qp"),
        )
    )
    values = "   ".join(
        f"{name} = {verdict[name]}" for name in ("tau", "genus", "g4") if verdict[name] is not None
    )
    lines = [f"verdict:      {flags}"]
    if values:
        lines.append(f"values:       {values}")
    if verdict["certificates"]:
        lines.append("certificates:")
        for cert in verdict["certificates"]:
            lines += _render_certificate(cert, 1)
    return lines


def _render_certificate(cert: dict, depth: int) -> list[str]:
    marker = " [CONJECTURAL]" if cert.get("conjectural") else ""
    lines = [f"{'  ' * depth}{cert['rule']}: {cert['conclusion']}{marker}"]
    for premise in cert["premises"]:
        if isinstance(premise, dict):
            lines += _render_certificate(premise, depth + 1)
        else:
            lines.append(f"{'  ' * (depth + 1)}- {premise}")
    return lines


def _render_selftest(report: dict) -> str:
    lines = []
    for check in report["checks"]:
        status = "ok" if check["passed"] else "FAIL"
        lines.append(f"{status:4} {check['name']}: {check['detail']}")
    lines.append("selftest " + ("passed" if report["passed"] else "FAILED"))
    return "\n".join(lines)
