"""Certificate-producing positivity classifier for knot expressions.

Every conclusion is derived by a named rule and wrapped in a
:class:`Certificate` recording the rule identifier and its premises, so a
verdict can be audited mechanically.  Rule identifiers:

Value rules
    R-TORUS      tau of a torus knot is (p-1)(q-1)/2, its Seifert genus
    R-SUM        tau is additive under connected sum
    R-MIRROR     tau changes sign under mirror image
    R-ALT        alternating knots: tau = -sigma/2 under this package's
                 signature convention (right-handed trefoil has sigma = -2)
    R-CABLE      positive iterated torus knots attain tau = genus
    R-SQP        strongly quasipositive knots attain tau = genus
    R-WHDOUBLE-0 tau of a positive n-twisted double vanishes once
                 n >= -TB(mirror companion)  (Livingston-Naik)
    R-WHDOUBLE-CONJ  conjectural: n <= 2 tau(companion) - 1 forces
                 tau = genus = 1; disabled unless requested, and every
                 certificate it emits is marked conjectural
    G-TORUS, G-CABLE, G-SQP-SURFACE, G-MIRROR, G4-MIRROR, A-*  genus / g4
                 bookkeeping and assertion intake

Flag rules
    P1  closure of an all-positive braid word is a positive braid
    P2  closure of an explicit band presentation is strongly quasipositive
    P3  closure of an explicit conjugate presentation is quasipositive
    P4  iterated torus: strongly quasipositive iff every twist n_i >= 0
    P5  fibered: strongly quasipositive iff tau = genus
    P6  doubles: strongly quasipositive iff n <= TB(companion)  (Rudolph)
    N1  tau < 0 rules out quasipositivity
    N2  mirror of a quasipositive knot with g4 > 0 is not quasipositive
    N3  alternating with tau != g4 is not quasipositive
    N4  doubles with n >= -TB(mirror companion) and 4n+1 not a perfect
        square: tau = 0 yet not slice, so not quasipositive

Propagation
    CHAIN   positive braids <= positive knots <= strongly quasipositive
            <= quasipositive, and the negative chain in reverse
    SQP-EQ  strongly quasipositive: tau = g4 = genus
    QP-EQ   quasipositive: g4 = tau

Yes/no/unknown verdicts are strict: absence of a rule never implies a
negative, and incompatible derivations raise :class:`ContradictionError`
to flag bad assertions.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping

from .errors import ContradictionError, DomainError, InternalConsistencyError
from .expressions import (
    BraidClosure,
    ConnectedSum,
    IteratedTorus,
    KnotExpression,
    Mirror,
    Torus,
    TwistKnot,
    WhiteheadDouble,
)
from .grammar import canonical_name
from .invariants import (
    fox_milnor_twist_family,
    seifert_matrix,
    signature,
    twist_double_alexander,
)

FLAG_KEYS = ("positive_braid", "positive", "sqp", "qp", "not_qp")

#: Built-in maximal Thurston-Bennequin numbers, keyed by canonical name.
#: TB values are external inputs throughout; only the unknot is built in.
DEFAULT_TB_TABLE: dict[str, tuple[int, str]] = {
    "unknot": (-1, "maximal Thurston-Bennequin number of the unknot"),
}


@dataclass(frozen=True)
class Certificate:
    rule: str
    conclusion: str
    premises: tuple["Certificate | str", ...] = ()
    conjectural: bool = False

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "conclusion": self.conclusion,
            "conjectural": self.conjectural,
            "premises": [
                p.to_json() if isinstance(p, Certificate) else p for p in self.premises
            ],
        }

    def iter_rules(self) -> Iterator[str]:
        yield self.rule
        for premise in self.premises:
            if isinstance(premise, Certificate):
                yield from premise.iter_rules()


@dataclass(frozen=True)
class ClassifierConfig:
    enable_conjectural: bool = False
    tb_table: Mapping[str, tuple[int, str]] = field(
        default_factory=lambda: dict(DEFAULT_TB_TABLE)
    )


@dataclass(frozen=True)
class Verdict:
    positive_braid: str
    positive: str
    sqp: str
    qp: str
    not_qp: str
    tau: int | None
    genus: int | None
    g4: int | None
    certificates: tuple[Certificate, ...]
    warnings: tuple[str, ...] = ()

    def flag(self, key: str) -> str:
        return getattr(self, key)

    def rules_used(self) -> set[str]:
        return {rule for cert in self.certificates for rule in cert.iter_rules()}

    def find(self, rule: str) -> Certificate | None:
        stack = list(self.certificates)
        while stack:
            cert = stack.pop()
            if cert.rule == rule:
                return cert
            stack.extend(p for p in cert.premises if isinstance(p, Certificate))
        return None

    def to_json(self) -> dict:
        return {
            "positive_braid": self.positive_braid,
            "positive": self.positive,
            "sqp": self.sqp,
            "qp": self.qp,
            "not_qp": self.not_qp,
            "tau": self.tau,
            "genus": self.genus,
            "g4": self.g4,
            "certificates": [cert.to_json() for cert in self.certificates],
        }


def load_tb_table(path: str) -> dict[str, tuple[int, str]]:
    """Read a TB table file: ``name<TAB>tb-value<TAB>source-note`` per line."""
    table = dict(DEFAULT_TB_TABLE)
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise DomainError(f"{path}:{lineno}: expected name<TAB>tb-value<TAB>note")
            name = parts[0].strip()
            try:
                value = int(parts[1])
            except ValueError as exc:
                raise DomainError(f"{path}:{lineno}: tb value {parts[1]!r} is not an integer") from exc
            note = parts[2].strip() if len(parts) > 2 else ""
            table[name] = (value, note)
    return table


# ---------------------------------------------------------------------------
# Working state


class _Facts:
    def __init__(self) -> None:
        self.values: dict[str, int] = {}
        self.value_certs: dict[str, list[Certificate]] = {}
        self.flags: dict[str, str] = {key: "unknown" for key in FLAG_KEYS}
        self.flag_certs: dict[str, list[Certificate]] = {key: [] for key in FLAG_KEYS}
        self.alternating = False
        self.alternating_cert: Certificate | None = None
        self.fibered = False
        self.fibered_cert: Certificate | None = None
        self.warnings: list[str] = []
        self.changed = False

    def value(self, key: str) -> int | None:
        return self.values.get(key)

    def certs(self, key: str) -> list[Certificate]:
        return self.value_certs.get(key, [])

    def primary_cert(self, key: str) -> Certificate | None:
        certs = self.value_certs.get(key)
        return certs[0] if certs else None

    def has_rule(self, key: str, rule: str) -> bool:
        return any(cert.rule == rule for cert in self.value_certs.get(key, []))

    def set_value(self, key: str, value: int, cert: Certificate) -> None:
        current = self.values.get(key)
        if current is None:
            self.values[key] = value
            self.value_certs.setdefault(key, []).append(cert)
            self.changed = True
        elif current != value:
            rules = [c.rule for c in self.value_certs.get(key, [])] + [cert.rule]
            raise ContradictionError(
                f"{key} derived as both {current} and {value} (rules {', '.join(rules)}); "
                "check the asserted facts"
            )
        elif not self.has_rule(key, cert.rule):
            self.value_certs.setdefault(key, []).append(cert)

    def flag_has_rule(self, key: str, rule: str) -> bool:
        return any(cert.rule == rule for cert in self.flag_certs[key])

    def set_flag(self, key: str, value: str, cert: Certificate) -> None:
        current = self.flags[key]
        if current == "unknown":
            self.flags[key] = value
            self.flag_certs[key].append(cert)
            self.changed = True
        elif current != value:
            rules = [c.rule for c in self.flag_certs[key]] + [cert.rule]
            raise ContradictionError(
                f"flag {key} derived as both {current} and {value} "
                f"(rules {', '.join(rules)}); check the asserted facts"
            )
        elif not self.flag_has_rule(key, cert.rule):
            self.flag_certs[key].append(cert)


# ---------------------------------------------------------------------------
# Helpers


def _children(expr: KnotExpression) -> tuple[KnotExpression, ...]:
    if isinstance(expr, Mirror):
        return (expr.inner,)
    if isinstance(expr, WhiteheadDouble):
        return (expr.companion,)
    if isinstance(expr, ConnectedSum):
        return expr.summands
    return ()


def _cancel_double_mirrors(expr: KnotExpression) -> KnotExpression:
    """Structurally remove mirror(mirror(x)) pairs that carry no assertions."""
    if isinstance(expr, Mirror):
        inner = _cancel_double_mirrors(expr.inner)
        if (
            isinstance(inner, Mirror)
            and expr.asserted.is_empty()
            and inner.asserted.is_empty()
        ):
            return _cancel_double_mirrors(inner.inner)
        return Mirror(inner, expr.asserted)
    if isinstance(expr, WhiteheadDouble):
        return replace(expr, companion=_cancel_double_mirrors(expr.companion))
    if isinstance(expr, ConnectedSum):
        return replace(
            expr, summands=tuple(_cancel_double_mirrors(s) for s in expr.summands)
        )
    return expr


def _is_unknot(expr: KnotExpression) -> bool:
    if isinstance(expr, Torus):
        return min(expr.p, expr.q) == 1
    if isinstance(expr, TwistKnot):
        return expr.n == 0
    if isinstance(expr, Mirror):
        return _is_unknot(expr.inner)
    return False


def _mirror_of(expr: KnotExpression) -> KnotExpression:
    if isinstance(expr, Mirror) and expr.asserted.is_empty():
        return expr.inner
    return Mirror(expr)


def _tb_of(expr: KnotExpression, config: ClassifierConfig) -> tuple[int, Certificate] | None:
    if expr.asserted.tb is not None:
        note = expr.asserted.note or "asserted input"
        return expr.asserted.tb, Certificate(
            "A-TB", f"TB({canonical_name(expr)}) = {expr.asserted.tb} ({note})"
        )
    if _is_unknot(expr):
        value, note = config.tb_table.get("unknot", DEFAULT_TB_TABLE["unknot"])
        return value, Certificate("TB-BUILTIN", f"TB(unknot) = {value} ({note})")
    name = canonical_name(expr)
    if name in config.tb_table:
        value, note = config.tb_table[name]
        return value, Certificate("TB-TABLE", f"TB({name}) = {value} ({note or 'table entry'})")
    return None


# ---------------------------------------------------------------------------
# Rule passes


def _seed_assertions(expr: KnotExpression, facts: _Facts) -> None:
    asserted = expr.asserted
    note = asserted.note or "asserted input"
    if asserted.fibered:
        facts.fibered = True
        facts.fibered_cert = Certificate("A-FIBERED", f"fibered ({note})")
    if asserted.alternating:
        facts.alternating = True
        facts.alternating_cert = Certificate("A-ALT", f"alternating ({note})")
    if asserted.genus is not None:
        facts.set_value(
            "genus", asserted.genus, Certificate("A-GENUS", f"genus = {asserted.genus} ({note})")
        )
    if asserted.g4 is not None:
        facts.set_value(
            "g4", asserted.g4, Certificate("A-G4", f"g4 = {asserted.g4} ({note})")
        )


def _cable_genus(stages: tuple[tuple[int, int], ...]) -> tuple[int, list[str]]:
    genus = 0
    steps: list[str] = []
    for depth, (p, n) in enumerate(stages):
        q = p * n + 1
        twist_term = (p - 1) * (q - 1) // 2
        if depth == 0:
            genus = twist_term
            steps.append(f"g(T({p},{q})) = ({p}-1)({q}-1)/2 = {genus}")
        else:
            genus = p * genus + twist_term
            steps.append(
                f"({p},{q})-cable: g = {p} * g(companion) + ({p}-1)({q}-1)/2 = {genus}"
            )
    return genus, steps


def _whitehead_rules(
    facts: _Facts,
    n: int,
    tb_companion: tuple[int, Certificate] | None,
    tb_mirror: tuple[int, Certificate] | None,
    companion_tau: tuple[int, Certificate] | None,
    config: ClassifierConfig,
) -> None:
    if tb_mirror is not None and n >= -tb_mirror[0]:
        facts.set_value(
            "tau",
            0,
            Certificate(
                "R-WHDOUBLE-0",
                f"tau of the positive {n}-twisted double vanishes since "
                f"n = {n} >= -TB(mirror companion) = {-tb_mirror[0]} (Livingston-Naik)",
                premises=(tb_mirror[1],),
            ),
        )
        if not fox_milnor_twist_family(n):
            facts.set_flag(
                "not_qp",
                "yes",
                Certificate(
                    "N4",
                    f"tau = 0 but the double's Alexander polynomial "
                    f"{twist_double_alexander(n)} has determinant {abs(4 * n + 1)}, "
                    "not a perfect square, so the knot is not slice; a quasipositive "
                    "knot would have g4 = tau = 0",
                    premises=(tb_mirror[1],),
                ),
            )
    if tb_companion is not None:
        if n <= tb_companion[0]:
            facts.set_flag(
                "sqp",
                "yes",
                Certificate(
                    "P6",
                    f"n = {n} <= TB(companion) = {tb_companion[0]}, so the double bounds "
                    "a quasipositive surface (Rudolph)",
                    premises=(tb_companion[1],),
                ),
            )
        else:
            facts.set_flag(
                "sqp",
                "no",
                Certificate(
                    "P6",
                    f"n = {n} > TB(companion) = {tb_companion[0]}, so the double is not "
                    "strongly quasipositive (Rudolph)",
                    premises=(tb_companion[1],),
                ),
            )
    if (
        config.enable_conjectural
        and companion_tau is not None
        and n <= 2 * companion_tau[0] - 1
    ):
        cert = Certificate(
            "R-WHDOUBLE-CONJ",
            f"n = {n} <= 2 tau(companion) - 1 = {2 * companion_tau[0] - 1} would force "
            "tau = genus = 1 (CONJECTURAL)",
            premises=(companion_tau[1],),
            conjectural=True,
        )
        facts.set_value("tau", 1, cert)
        facts.set_value("genus", 1, cert)
        facts.warnings.append(
            "conjectural rule R-WHDOUBLE-CONJ contributed to this verdict"
        )


def _seed_node_facts(
    expr: KnotExpression,
    facts: _Facts,
    child_facts: tuple[_Facts, ...],
    config: ClassifierConfig,
) -> None:
    if isinstance(expr, Torus):
        value = (expr.p - 1) * (expr.q - 1) // 2
        facts.set_value(
            "tau",
            value,
            Certificate(
                "R-TORUS", f"tau(T({expr.p},{expr.q})) = ({expr.p}-1)({expr.q}-1)/2 = {value}"
            ),
        )
        facts.set_value(
            "genus",
            value,
            Certificate(
                "G-TORUS", f"g(T({expr.p},{expr.q})) = ({expr.p}-1)({expr.q}-1)/2 = {value}"
            ),
        )
        return

    if isinstance(expr, IteratedTorus):
        if all(n >= 0 for _, n in expr.stages):
            genus, steps = _cable_genus(expr.stages)
            genus_cert = Certificate(
                "G-CABLE",
                f"cable genus recursion gives g = {genus}",
                premises=tuple(steps),
            )
            facts.set_value("genus", genus, genus_cert)
            facts.set_value(
                "tau",
                genus,
                Certificate(
                    "R-CABLE",
                    f"iterated torus knot with all twists n_i >= 0 attains tau = g = {genus}",
                    premises=(genus_cert,),
                ),
            )
            facts.set_flag(
                "sqp",
                "yes",
                Certificate("P4", "iterated torus knot with all cabling twists n_i >= 0"),
            )
        else:
            bad = next((p, n) for p, n in expr.stages if n < 0)
            facts.set_flag(
                "sqp",
                "no",
                Certificate(
                    "P4",
                    f"cabling stage {bad} has a negative twist, so the knot is not "
                    "strongly quasipositive",
                ),
            )
        return

    if isinstance(expr, TwistKnot):
        if expr.n == 0:
            cert = Certificate("FACT-UNKNOT", "the 0-twist double of the unknot is the unknot")
            facts.set_value("tau", 0, cert)
            facts.set_value("genus", 0, cert)
            facts.set_value("g4", 0, cert)
            facts.set_flag("sqp", "yes", cert)
            return
        if expr.n > 0:
            alt_cert = Certificate("FACT-TWIST-ALT", "twist knots are alternating")
            facts.alternating = True
            if facts.alternating_cert is None:
                facts.alternating_cert = alt_cert
            facts.set_value(
                "sigma",
                0,
                Certificate(
                    "FACT-TWIST-SIGMA", f"twist knots with n = {expr.n} > 0 have signature 0"
                ),
            )
        tb = config.tb_table.get("unknot", DEFAULT_TB_TABLE["unknot"])
        tb_cert = Certificate("TB-BUILTIN", f"TB(unknot) = {tb[0]} ({tb[1]})")
        unknot_tau = (0, Certificate("FACT-UNKNOT", "tau(unknot) = 0"))
        _whitehead_rules(facts, expr.n, (tb[0], tb_cert), (tb[0], tb_cert), unknot_tau, config)
        return

    if isinstance(expr, WhiteheadDouble):
        companion_tau = None
        child = child_facts[0]
        if child.value("tau") is not None:
            cert = child.primary_cert("tau")
            assert cert is not None
            companion_tau = (child.value("tau"), cert)
        _whitehead_rules(
            facts,
            expr.n,
            _tb_of(expr.companion, config),
            _tb_of(_mirror_of(expr.companion), config),
            companion_tau,
            config,
        )
        return

    if isinstance(expr, Mirror):
        child = child_facts[0]
        tau = child.value("tau")
        if tau is not None:
            cert = child.primary_cert("tau")
            assert cert is not None
            facts.set_value(
                "tau",
                -tau,
                Certificate(
                    "R-MIRROR", f"tau changes sign under mirror image: -({tau}) = {-tau}",
                    premises=(cert,),
                ),
            )
        genus = child.value("genus")
        if genus is not None:
            cert = child.primary_cert("genus")
            assert cert is not None
            facts.set_value(
                "genus",
                genus,
                Certificate(
                    "G-MIRROR", f"Seifert genus is mirror-invariant: g = {genus}",
                    premises=(cert,),
                ),
            )
        g4 = child.value("g4")
        if g4 is not None:
            cert = child.primary_cert("g4")
            assert cert is not None
            facts.set_value(
                "g4",
                g4,
                Certificate(
                    "G4-MIRROR", f"slice genus is mirror-invariant: g4 = {g4}",
                    premises=(cert,),
                ),
            )
        if child.flags["qp"] == "yes" and g4 is not None and g4 > 0:
            qp_cert = child.flag_certs["qp"][0]
            g4_cert = child.primary_cert("g4")
            assert g4_cert is not None
            facts.set_flag(
                "not_qp",
                "yes",
                Certificate(
                    "N2",
                    f"mirror image of a quasipositive knot with g4 = {g4} > 0 "
                    "(a non-slice quasipositive knot) is not quasipositive",
                    premises=(qp_cert, g4_cert),
                ),
            )
        return

    if isinstance(expr, ConnectedSum):
        taus = [child.value("tau") for child in child_facts]
        if all(t is not None for t in taus):
            certs = []
            for child in child_facts:
                cert = child.primary_cert("tau")
                assert cert is not None
                certs.append(cert)
            total = sum(taus)  # type: ignore[arg-type]
            facts.set_value(
                "tau",
                total,
                Certificate(
                    "R-SUM",
                    "tau is additive under connected sum: "
                    + " + ".join(str(t) for t in taus)
                    + f" = {total}",
                    premises=tuple(certs),
                ),
            )
        return

    if isinstance(expr, BraidClosure):
        if expr.bands is not None:
            b, m = expr.bands.strands, len(expr.bands.bands)
            genus = (m - b + 1) // 2
            facts.set_value(
                "genus",
                genus,
                Certificate(
                    "G-SQP-SURFACE",
                    f"quasipositive surface genus = {genus}",
                    premises=(
                        f"surface from {b} disks and {m} positive bands: "
                        "genus = (m - b + 1)/2",
                    ),
                ),
            )
            facts.set_flag(
                "sqp",
                "yes",
                Certificate(
                    "P2", "the word is an explicit product of positive bands"
                ),
            )
        if expr.conjugates is not None:
            facts.set_flag(
                "qp",
                "yes",
                Certificate(
                    "P3",
                    "the word is an explicit product of conjugated positive generators",
                ),
            )
        if expr.word.is_positive():
            facts.set_flag(
                "positive_braid",
                "yes",
                Certificate("P1", "the braid word has no negative letters"),
            )
        if facts.alternating and facts.value("sigma") is None:
            sigma = signature(seifert_matrix(expr.word))
            facts.set_value(
                "sigma",
                sigma,
                Certificate(
                    "SIGMA-SEIFERT",
                    f"sigma = {sigma}, computed from a Seifert matrix of the closure",
                ),
            )
        return


def _dynamic_rules(facts: _Facts) -> None:
    tau = facts.value("tau")
    genus = facts.value("genus")
    g4 = facts.value("g4")
    sigma = facts.value("sigma")

    if facts.alternating and sigma is not None and not facts.has_rule("tau", "R-ALT"):
        if sigma % 2:
            raise InternalConsistencyError(f"knot signature {sigma} should be even")
        sigma_cert = facts.primary_cert("sigma")
        assert sigma_cert is not None
        premises: tuple[Certificate | str, ...] = (sigma_cert,)
        if facts.alternating_cert is not None:
            premises = (facts.alternating_cert,) + premises
        facts.set_value(
            "tau",
            -sigma // 2,
            Certificate(
                "R-ALT",
                f"alternating knot: tau = -sigma/2 = {-sigma // 2} "
                "(convention: sigma of the right-handed trefoil is -2)",
                premises=premises,
            ),
        )

    if facts.flags["sqp"] == "yes" and genus is not None and not facts.has_rule("tau", "R-SQP"):
        genus_cert = facts.primary_cert("genus")
        sqp_cert = facts.flag_certs["sqp"][0]
        assert genus_cert is not None
        facts.set_value(
            "tau",
            genus,
            Certificate(
                "R-SQP",
                f"strongly quasipositive knots attain tau = g = {genus}",
                premises=(sqp_cert, genus_cert),
            ),
        )

    if facts.flags["sqp"] == "yes":
        _unify(facts, ("tau", "genus", "g4"), "SQP-EQ",
               "strongly quasipositive: tau = g4 = genus",
               facts.flag_certs["sqp"][0])
    if facts.flags["qp"] == "yes":
        _unify(facts, ("tau", "g4"), "QP-EQ", "quasipositive: g4 = tau",
               facts.flag_certs["qp"][0])

    tau = facts.value("tau")
    genus = facts.value("genus")
    g4 = facts.value("g4")

    if facts.fibered and tau is not None and genus is not None:
        assert facts.fibered_cert is not None
        tau_cert = facts.primary_cert("tau")
        genus_cert = facts.primary_cert("genus")
        assert tau_cert is not None and genus_cert is not None
        if tau == genus:
            facts.set_flag(
                "sqp",
                "yes",
                Certificate(
                    "P5",
                    f"fibered with tau = g = {tau}, which characterizes strong "
                    "quasipositivity for fibered knots",
                    premises=(facts.fibered_cert, tau_cert, genus_cert),
                ),
            )
        else:
            facts.set_flag(
                "sqp",
                "no",
                Certificate(
                    "P5",
                    f"fibered with tau = {tau} != g = {genus}, so not strongly quasipositive",
                    premises=(facts.fibered_cert, tau_cert, genus_cert),
                ),
            )

    if tau is not None and tau < 0:
        tau_cert = facts.primary_cert("tau")
        assert tau_cert is not None
        facts.set_flag(
            "not_qp",
            "yes",
            Certificate(
                "N1",
                f"tau = {tau} < 0, while quasipositive knots have tau = g4 >= 0",
                premises=(tau_cert,),
            ),
        )

    if facts.alternating and tau is not None and g4 is not None and tau != g4:
        tau_cert = facts.primary_cert("tau")
        g4_cert = facts.primary_cert("g4")
        assert tau_cert is not None and g4_cert is not None
        premises = (tau_cert, g4_cert)
        if facts.alternating_cert is not None:
            premises = (facts.alternating_cert,) + premises
        facts.set_flag(
            "not_qp",
            "yes",
            Certificate(
                "N3",
                f"alternating with tau = {tau} != g4 = {g4}; a quasipositive knot "
                "would have tau = g4",
                premises=premises,
            ),
        )


def _unify(
    facts: _Facts, keys: tuple[str, ...], rule: str, reason: str, premise: Certificate
) -> None:
    known = {key: facts.value(key) for key in keys if facts.value(key) is not None}
    if not known:
        return
    values = set(known.values())
    if len(values) > 1:
        raise ContradictionError(
            f"{reason}, but " + ", ".join(f"{k} = {v}" for k, v in known.items())
        )
    value = values.pop()
    source_key = next(iter(known))
    source_cert = facts.primary_cert(source_key)
    assert source_cert is not None
    for key in keys:
        if facts.value(key) is None:
            facts.set_value(
                key,
                value,
                Certificate(rule, f"{reason}; {key} = {value}", premises=(premise, source_cert)),
            )


_CHAIN_UP = (("positive_braid", "positive"), ("positive", "sqp"), ("sqp", "qp"))


def _propagate(facts: _Facts) -> None:
    for lower, upper in _CHAIN_UP:
        if facts.flags[lower] == "yes" and not facts.flag_has_rule(upper, "CHAIN"):
            facts.set_flag(
                upper,
                "yes",
                Certificate(
                    "CHAIN",
                    f"{lower} = yes forces {upper} = yes along the positivity chain",
                    premises=(facts.flag_certs[lower][0],),
                ),
            )
    for lower, upper in reversed(_CHAIN_UP):
        if facts.flags[upper] == "no" and not facts.flag_has_rule(lower, "CHAIN"):
            facts.set_flag(
                lower,
                "no",
                Certificate(
                    "CHAIN",
                    f"{upper} = no forces {lower} = no along the positivity chain",
                    premises=(facts.flag_certs[upper][0],),
                ),
            )
    if facts.flags["not_qp"] == "yes" and facts.flags["qp"] == "unknown":
        facts.set_flag(
            "qp",
            "no",
            Certificate("CHAIN", "established not quasipositive",
                        premises=(facts.flag_certs["not_qp"][0],)),
        )
    if facts.flags["qp"] == "no" and facts.flags["not_qp"] == "unknown":
        facts.set_flag(
            "not_qp",
            "yes",
            Certificate("CHAIN", "quasipositive = no", premises=(facts.flag_certs["qp"][0],)),
        )
    if facts.flags["qp"] == "yes" and facts.flags["not_qp"] == "unknown":
        facts.set_flag(
            "not_qp",
            "no",
            Certificate("CHAIN", "established quasipositive",
                        premises=(facts.flag_certs["qp"][0],)),
        )
    if facts.flags["qp"] == "yes" and facts.flags["not_qp"] == "yes":
        raise ContradictionError("quasipositive and not-quasipositive both derived")


def _check_consistency(facts: _Facts) -> None:
    tau = facts.value("tau")
    g4 = facts.value("g4")
    genus = facts.value("genus")
    if g4 is not None and g4 < 0:
        raise ContradictionError(f"g4 = {g4} cannot be negative")
    if genus is not None and genus < 0:
        raise ContradictionError(f"genus = {genus} cannot be negative")
    if tau is not None and g4 is not None and abs(tau) > g4:
        raise ContradictionError(
            f"|tau| = {abs(tau)} exceeds g4 = {g4}; check the asserted facts"
        )


def _evaluate(expr: KnotExpression, config: ClassifierConfig) -> _Facts:
    child_facts = tuple(_evaluate(child, config) for child in _children(expr))
    facts = _Facts()
    for child in child_facts:
        facts.warnings.extend(child.warnings)
    _seed_assertions(expr, facts)
    _seed_node_facts(expr, facts, child_facts, config)
    while True:
        facts.changed = False
        _dynamic_rules(facts)
        _propagate(facts)
        _check_consistency(facts)
        if not facts.changed:
            break
    return facts


# ---------------------------------------------------------------------------
# Public API


def classify(expr: KnotExpression, config: ClassifierConfig | None = None) -> Verdict:
    """Evaluate every applicable rule and assemble a :class:`Verdict`."""
    config = config or ClassifierConfig()
    expr = _cancel_double_mirrors(expr)
    facts = _evaluate(expr, config)
    certificates: list[Certificate] = []
    for key in ("tau", "genus", "g4"):
        certificates.extend(facts.certs(key))
    for key in FLAG_KEYS:
        certificates.extend(facts.flag_certs[key])
    return Verdict(
        positive_braid=facts.flags["positive_braid"],
        positive=facts.flags["positive"],
        sqp=facts.flags["sqp"],
        qp=facts.flags["qp"],
        not_qp=facts.flags["not_qp"],
        tau=facts.value("tau"),
        genus=facts.value("genus"),
        g4=facts.value("g4"),
        certificates=tuple(certificates),
        warnings=tuple(dict.fromkeys(facts.warnings)),
    )


def tau_certificate(
    expr: KnotExpression, config: ClassifierConfig | None = None
) -> tuple[int, Certificate] | None:
    """The derived tau value with its primary certificate, if the rules reach one."""
    config = config or ClassifierConfig()
    facts = _evaluate(_cancel_double_mirrors(expr), config)
    tau = facts.value("tau")
    if tau is None:
        return None
    cert = facts.primary_cert("tau")
    assert cert is not None
    return tau, cert


def genus_certificate(
    expr: KnotExpression, config: ClassifierConfig | None = None
) -> tuple[int, Certificate] | None:
    """The derived Seifert genus with its primary certificate, if any."""
    config = config or ClassifierConfig()
    facts = _evaluate(_cancel_double_mirrors(expr), config)
    genus = facts.value("genus")
    if genus is None:
        return None
    cert = facts.primary_cert("genus")
    assert cert is not None
    return genus, cert
