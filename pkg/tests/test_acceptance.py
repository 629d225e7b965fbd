"""Acceptance suite: one test per release criterion, one printed line each.

Every check is exact integer arithmetic; there are no tolerances to tune.
Random inputs are drawn from fixed seeds so the suite is reproducible.
"""

import random
from math import gcd, isqrt

from braidpos.braids import (
    BraidWord,
    expand_qp,
    expand_sqp,
    sqp_surface_stats,
    torus_braid,
)
from braidpos.classifier import classify, tau_certificate
from braidpos.expressions import (
    Assertions,
    BraidClosure,
    IteratedTorus,
    Torus,
    TwistKnot,
    braid_closure_from_bands,
)
from braidpos.invariants import (
    alexander_burau,
    alexander_seifert,
    seifert_matrix,
    signature,
)
from braidpos.laurent import LaurentPoly
from braidpos.legendrian import bennequin_sum, slice_genus_lower_bound
from braidpos.report import verdict_chain_ok
from braidpos.sampling import (
    random_band_factorization,
    random_expression,
    random_knot_word,
    random_qp_factorization,
)

FIGURE8 = BraidWord(3, (1, -2, 1, -2))


def _report(number: int, description: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"\n[ACCEPTANCE {number}] {status} - {description}")
    assert not failures, f"criterion {number}: {failures[:5]}"


def test_criterion_1_torus_table():
    failures = []
    for p in range(2, 8):
        for q in range(p + 1, 8):
            if gcd(p, q) != 1:
                continue
            expected = (p - 1) * (q - 1) // 2
            derived = tau_certificate(Torus(p, q))
            if derived is None or derived[0] != expected:
                failures.append((p, q, "tau", derived))
            bound = slice_genus_lower_bound(torus_braid(p, q))
            if bound != expected:
                failures.append((p, q, "bound", bound))
    _report(1, "torus knots 2 <= p < q <= 7: tau = (p-1)(q-1)/2, bound is sharp", failures)


def test_criterion_2_quasipositive_sharpness():
    rng = random.Random(101)
    failures = []
    for _ in range(200):
        f = random_qp_factorization(rng, max_strands=6, max_factors=10, max_conjugator=6)
        value = bennequin_sum(expand_qp(f))
        if value != -f.strands + len(f):
            failures.append((f, value))
    _report(2, "200 conjugate presentations: tb + |rot| = -b + m exactly", failures)


def test_criterion_3_sqp_triple_agreement():
    rng = random.Random(102)
    failures = []
    for _ in range(200):
        f = random_band_factorization(rng, max_strands=6, max_bands=10)
        genus = sqp_surface_stats(f).genus
        bound = slice_genus_lower_bound(expand_sqp(f))
        verdict = classify(braid_closure_from_bands(f))
        tau_ok = verdict.tau == genus and verdict.find("R-SQP") is not None
        if not (genus == bound and tau_ok):
            failures.append((f, genus, bound, verdict.tau))
    _report(3, "200 band presentations: surface genus = Bennequin bound = tau (R-SQP)", failures)


def test_criterion_4_alexander_oracle_equivalence():
    rng = random.Random(103)
    failures = []
    for _ in range(300):
        word = random_knot_word(rng, max_strands=6, max_length=14)
        burau = alexander_burau(word)
        seifert = alexander_seifert(seifert_matrix(word))
        if burau != seifert:
            failures.append((word, str(burau), str(seifert)))
    expected_fig8 = LaurentPoly({1: -1, 0: 3, -1: -1})
    if alexander_burau(FIGURE8) != expected_fig8:
        failures.append(("figure-eight", str(alexander_burau(FIGURE8))))
    _report(4, "300 random knots: Burau route = Seifert route; figure-eight anchor", failures)


def test_criterion_5_twist_knot_suite():
    failures = []
    for n in range(1, 51):
        verdict = classify(TwistKnot(n))
        if verdict.tau != 0:
            failures.append((n, "tau", verdict.tau))
        square = isqrt(4 * n + 1) ** 2 == 4 * n + 1
        expected_not_qp = "unknown" if square else "yes"
        if verdict.not_qp != expected_not_qp:
            failures.append((n, "not_qp", verdict.not_qp))
        if square and verdict.qp != "unknown":
            failures.append((n, "qp", verdict.qp))
    for n in (2, 6, 12):
        if classify(TwistKnot(n)).qp != "unknown":
            failures.append((n, "qp should stay unknown"))
    _report(5, "twist knots 1..50: tau = 0, N4 fires exactly off the square family", failures)


def test_criterion_6_sign_convention_anchor():
    failures = []
    trefoil = BraidWord(2, (1, 1, 1))
    if signature(seifert_matrix(trefoil)) != -2:
        failures.append(("sigma trefoil", signature(seifert_matrix(trefoil))))
    alt_trefoil = BraidClosure(trefoil, asserted=Assertions(alternating=True))
    verdict = classify(alt_trefoil)
    if verdict.tau != 1 or verdict.find("R-ALT") is None:
        failures.append(("R-ALT trefoil", verdict.tau))
    if signature(seifert_matrix(FIGURE8)) != 0:
        failures.append(("sigma figure-eight", signature(seifert_matrix(FIGURE8))))
    fig8 = BraidClosure(FIGURE8, asserted=Assertions(alternating=True, g4=1))
    verdict = classify(fig8)
    if verdict.tau != 0 or verdict.not_qp != "yes":
        failures.append(("figure-eight verdict", verdict.tau, verdict.not_qp))
    _report(6, "sign anchors: sigma(trefoil) = -2, R-ALT tau = +1, figure-eight NotQP", failures)


def test_criterion_7_iterated_torus_criterion():
    failures = []
    for p1 in (2, 3):
        for n1 in (-1, 0, 1, 2):
            for p2 in (2, 3):
                for n2 in (-1, 0, 1, 2):
                    stages = ((p1, n1), (p2, n2))
                    verdict = classify(IteratedTorus(stages))
                    positive = n1 >= 0 and n2 >= 0
                    if verdict.sqp != ("yes" if positive else "no"):
                        failures.append((stages, "sqp", verdict.sqp))
                    if positive:
                        q1, q2 = p1 * n1 + 1, p2 * n2 + 1
                        genus1 = (p1 - 1) * (q1 - 1) // 2
                        expected = p2 * genus1 + (p2 - 1) * (q2 - 1) // 2
                        if verdict.tau != expected or verdict.genus != expected:
                            failures.append((stages, "tau/genus", verdict.tau, verdict.genus))
    verdict = classify(IteratedTorus(((2, 1), (2, 0))))
    if not (verdict.sqp == "yes" and verdict.tau == 2 and verdict.genus == 2):
        failures.append(("cable[(2,1),(2,0)]", verdict.sqp, verdict.tau, verdict.genus))
    _report(7, "two-stage cables: SQP iff all n_i >= 0, tau = g by the recursion", failures)


def test_criterion_8_chain_consistency_fuzz():
    rng = random.Random(108)
    failures = []
    for index in range(1000):
        expr = random_expression(rng)
        try:
            verdict = classify(expr)
        except Exception as exc:  # noqa: BLE001 - any raise is a failure here
            failures.append((index, repr(exc)))
            continue
        if not verdict_chain_ok(verdict):
            failures.append((index, "chain violation"))
    _report(8, "1000 random expressions: chain and |tau| <= g4 hold, no contradictions", failures)
