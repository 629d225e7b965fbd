"""Syntax trees describing knot constructions.

Every node may carry :class:`Assertions`, externally supplied facts with a
provenance note (fibered, alternating, a known maximal Thurston-Bennequin
number ``tb``, a known slice genus ``g4``, a known Seifert genus).  The
classifier never detects these properties; it only consumes assertions.

``IteratedTorus`` stages are pairs ``(p_i, n_i)`` read innermost first,
denoting the cable with parameters ``(p_i, p_i * n_i + 1)``; each
``p_i >= 2`` so every stage is a genuine cable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .braids import (
    BandFactorization,
    BraidWord,
    QPFactorization,
    band_form_of_positive_word,
    closure_stats,
    expand_qp,
    expand_sqp,
)
from .errors import DomainError


@dataclass(frozen=True)
class Assertions:
    fibered: bool = False
    alternating: bool = False
    tb: int | None = None
    g4: int | None = None
    genus: int | None = None
    # Provenance only; never part of structural equality.
    note: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.g4 is not None and self.g4 < 0:
            raise DomainError("asserted g4 must be nonnegative")
        if self.genus is not None and self.genus < 0:
            raise DomainError("asserted genus must be nonnegative")

    def is_empty(self) -> bool:
        return (
            not self.fibered
            and not self.alternating
            and self.tb is None
            and self.g4 is None
            and self.genus is None
        )


NO_ASSERTIONS = Assertions()


class KnotExpression:
    """Marker base class; concrete nodes are frozen dataclasses."""

    asserted: Assertions


@dataclass(frozen=True)
class Torus(KnotExpression):
    p: int
    q: int
    asserted: Assertions = NO_ASSERTIONS

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise DomainError(f"torus parameters must be >= 1, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise DomainError(
                f"({self.p}, {self.q}) are not coprime; the closure would be a link"
            )


@dataclass(frozen=True)
class IteratedTorus(KnotExpression):
    stages: tuple[tuple[int, int], ...]
    asserted: Assertions = NO_ASSERTIONS

    def __post_init__(self) -> None:
        object.__setattr__(self, "stages", tuple((p, n) for p, n in self.stages))
        if not self.stages:
            raise DomainError("an iterated torus knot needs at least one stage")
        for p, _ in self.stages:
            if p < 2:
                raise DomainError(f"cable width p = {p} rejected; every stage needs p >= 2")


@dataclass(frozen=True)
class TwistKnot(KnotExpression):
    """The twist knot with ``n`` full twists; ``n = -1`` is the right-handed
    trefoil, ``n = 0`` the unknot, ``n = 1`` the figure-eight."""

    n: int
    asserted: Assertions = NO_ASSERTIONS


@dataclass(frozen=True)
class WhiteheadDouble(KnotExpression):
    """Positive ``n``-twisted Whitehead double of the companion."""

    companion: KnotExpression
    n: int
    asserted: Assertions = NO_ASSERTIONS


@dataclass(frozen=True)
class ConnectedSum(KnotExpression):
    summands: tuple[KnotExpression, ...]
    asserted: Assertions = NO_ASSERTIONS

    def __post_init__(self) -> None:
        flat: list[KnotExpression] = []
        for summand in self.summands:
            if isinstance(summand, ConnectedSum) and summand.asserted.is_empty():
                flat.extend(summand.summands)
            else:
                flat.append(summand)
        object.__setattr__(self, "summands", tuple(flat))
        if len(self.summands) < 2:
            raise DomainError("a connected sum needs at least two summands")


@dataclass(frozen=True)
class Mirror(KnotExpression):
    inner: KnotExpression
    asserted: Assertions = NO_ASSERTIONS


@dataclass(frozen=True)
class BraidClosure(KnotExpression):
    """Closure of a braid word, which must be a knot.

    ``bands`` or ``conjugates`` record how the word was presented when it
    arose from an explicit factorization; the expansion must reproduce the
    stored word exactly.
    """

    word: BraidWord
    bands: BandFactorization | None = None
    conjugates: QPFactorization | None = None
    asserted: Assertions = NO_ASSERTIONS

    def __post_init__(self) -> None:
        if self.bands is not None and self.conjugates is not None:
            raise DomainError("a closure carries at most one factorization")
        if self.bands is not None and expand_sqp(self.bands) != self.word:
            raise DomainError("band factorization does not expand to the stored word")
        if self.conjugates is not None and expand_qp(self.conjugates) != self.word:
            raise DomainError("conjugate factorization does not expand to the stored word")
        if self.bands is None and self.conjugates is None and self.word.is_positive():
            # A positive word is letter-for-letter a band presentation.
            object.__setattr__(self, "bands", band_form_of_positive_word(self.word))
        stats = closure_stats(self.word)
        if stats.component_count != 1:
            raise DomainError(
                f"closure has {stats.component_count} components; only knots are classified"
            )


def braid_closure_from_bands(
    factorization: BandFactorization, asserted: Assertions = NO_ASSERTIONS
) -> BraidClosure:
    return BraidClosure(expand_sqp(factorization), bands=factorization, asserted=asserted)


def braid_closure_from_conjugates(
    factorization: QPFactorization, asserted: Assertions = NO_ASSERTIONS
) -> BraidClosure:
    return BraidClosure(expand_qp(factorization), conjugates=factorization, asserted=asserted)


def strip_assertions(expr: KnotExpression) -> KnotExpression:
    """Recursively drop all assertions; used for canonical table keys."""
    if isinstance(expr, Torus):
        return Torus(expr.p, expr.q)
    if isinstance(expr, IteratedTorus):
        return IteratedTorus(expr.stages)
    if isinstance(expr, TwistKnot):
        return TwistKnot(expr.n)
    if isinstance(expr, WhiteheadDouble):
        return WhiteheadDouble(strip_assertions(expr.companion), expr.n)
    if isinstance(expr, ConnectedSum):
        return ConnectedSum(tuple(strip_assertions(s) for s in expr.summands))
    if isinstance(expr, Mirror):
        return Mirror(strip_assertions(expr.inner))
    if isinstance(expr, BraidClosure):
        return BraidClosure(expr.word, bands=expr.bands, conjugates=expr.conjugates)
    raise DomainError(f"unknown expression node {type(expr).__name__}")
