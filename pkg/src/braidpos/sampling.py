"""Seeded random generators for self-tests and property suites.

Expression sampling only ever attaches assertions that are true of the
sampled knot (fibered positive braid closures, alternating two-strand
torus closures, the known TB value of the trefoil), so a contradiction
raised downstream always indicates an engine bug rather than fuzz noise.
"""

from __future__ import annotations

import random

from .braids import (
    BandFactorization,
    BraidWord,
    QPFactorization,
    closure_stats,
    free_reduce,
    torus_braid,
)
from .expressions import (
    Assertions,
    BraidClosure,
    ConnectedSum,
    IteratedTorus,
    KnotExpression,
    Mirror,
    Torus,
    TwistKnot,
    WhiteheadDouble,
    braid_closure_from_bands,
)


def random_knot_word(
    rng: random.Random, max_strands: int = 6, max_length: int = 14
) -> BraidWord:
    """A freely reduced word with knot closure, at most ``max_length`` letters."""
    while True:
        strands = rng.randint(2, max_strands)
        length = rng.randint(strands - 1, max_length)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
        )
        word = free_reduce(BraidWord(strands, letters))
        if word.letters and len(word) <= max_length:
            if closure_stats(word).component_count == 1:
                return word


def random_band_factorization(
    rng: random.Random, max_strands: int = 6, max_bands: int = 10
) -> BandFactorization:
    """A band presentation whose closure is a knot."""
    while True:
        strands = rng.randint(2, max_strands)
        count = rng.randint(strands - 1, max_bands)
        bands = []
        for _ in range(count):
            i = rng.randint(1, strands - 1)
            j = rng.randint(i + 1, strands)
            bands.append((i, j))
        factorization = BandFactorization(strands, tuple(bands))
        from .braids import expand_sqp

        if closure_stats(expand_sqp(factorization)).component_count == 1:
            return factorization


def random_qp_factorization(
    rng: random.Random,
    max_strands: int = 6,
    max_factors: int = 10,
    max_conjugator: int = 6,
) -> QPFactorization:
    """A conjugate presentation whose closure is a knot."""
    from .braids import expand_qp

    while True:
        strands = rng.randint(2, max_strands)
        count = rng.randint(1, max_factors)
        factors = []
        for _ in range(count):
            length = rng.randint(0, max_conjugator)
            conjugator = BraidWord(
                strands,
                tuple(
                    rng.choice((1, -1)) * rng.randint(1, strands - 1)
                    for _ in range(length)
                ),
            )
            factors.append((conjugator, rng.randint(1, strands - 1)))
        factorization = QPFactorization(strands, tuple(factors))
        if closure_stats(expand_qp(factorization)).component_count == 1:
            return factorization


_COPRIME_PAIRS = ((2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (3, 7), (5, 6))


def random_expression(rng: random.Random, max_depth: int = 3) -> KnotExpression:
    """A random knot expression carrying only true assertions."""
    leaf_kinds = ("torus", "cable", "twist", "closure_bands", "closure_word", "closure_alt")
    deep_kinds = ("mirror", "sum", "whitehead")
    kind = rng.choice(leaf_kinds if max_depth <= 0 else leaf_kinds + deep_kinds)

    if kind == "torus":
        p, q = rng.choice(_COPRIME_PAIRS)
        asserted = Assertions(fibered=True, note="torus knots are fibered") if rng.random() < 0.4 else Assertions()
        return Torus(p, q, asserted)
    if kind == "cable":
        stages = tuple(
            (rng.choice((2, 3)), rng.randint(-2, 3)) for _ in range(rng.randint(1, 2))
        )
        return IteratedTorus(stages)
    if kind == "twist":
        return TwistKnot(rng.randint(-3, 10))
    if kind == "closure_bands":
        return braid_closure_from_bands(
            random_band_factorization(rng, max_strands=4, max_bands=6)
        )
    if kind == "closure_word":
        return BraidClosure(random_knot_word(rng, max_strands=4, max_length=8))
    if kind == "closure_alt":
        # Two-strand torus closures are alternating and fibered.
        q = rng.choice((3, 5, 7))
        asserted = Assertions(
            alternating=True,
            fibered=bool(rng.random() < 0.5),
            note="standard (2,q) torus diagram",
        )
        return BraidClosure(torus_braid(2, q), asserted=asserted)
    if kind == "mirror":
        return Mirror(random_expression(rng, max_depth - 1))
    if kind == "sum":
        count = rng.randint(2, 3)
        return ConnectedSum(
            tuple(random_expression(rng, max_depth - 1) for _ in range(count))
        )
    # whitehead: companion sometimes carries its true TB value
    if rng.random() < 0.5:
        companion: KnotExpression = Torus(
            2, 3, Assertions(tb=1, note="TB of the right-handed trefoil")
        )
    else:
        companion = random_expression(rng, max_depth - 1)
    return WhiteheadDouble(companion, rng.randint(-2, 8))
