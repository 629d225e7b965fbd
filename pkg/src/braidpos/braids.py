"""Braid words, band generators, and quasipositive factorizations.

Conventions used throughout the package:

- ``BraidWord(strands, letters)`` is a word in the braid group ``B_n`` on
  ``n = strands`` strands.  Letters are nonzero integers: ``k > 0`` stands
  for the Artin generator ``sigma_k`` (the strand in position ``k``
  crosses over position ``k + 1``) and ``k < 0`` for its inverse.
- ``BandGenerator(i, j)`` with ``1 <= i < j <= n`` is the positive band

      sigma_{i,j} = (sigma_i ... sigma_{j-2}) sigma_{j-1}
                    (sigma_i ... sigma_{j-2})^{-1},

  which degenerates to the single letter ``sigma_i`` when ``j = i + 1``.
  Its underlying permutation is the transposition ``(i j)``.
- The closure of a word joins the bottom of each position back to the top
  of the same position.  Surface bookkeeping for band presentations refers
  to the surface built from ``n`` parallel disks joined by one band per
  factor, so ``chi = n - m`` for ``m`` bands.

Words are plain immutable values.  Nothing here reduces modulo braid
relations; only free cancellation of adjacent ``sigma_k sigma_k^{-1}``
pairs is available, and only on request, because factorizations are
meaningful before cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError, InternalConsistencyError, NotAKnotError


@dataclass(frozen=True)
class BraidWord:
    """A word in ``B_n``, stored as signed generator indices."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise DomainError(f"strand count must be >= 1, got {self.strands}")
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise DomainError(
                    f"letter {k} is not a generator index of B_{self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if k > 0 else -1 for k in self.letters)

    def is_positive(self) -> bool:
        return all(k > 0 for k in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        """Negate every letter; the closure becomes the mirror image."""
        return BraidWord(self.strands, tuple(-k for k in self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise DomainError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)


@dataclass(frozen=True)
class BandGenerator:
    """The positive band ``sigma_{i,j}``, ``1 <= i < j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j <= self.i:
            raise DomainError(f"band indices must satisfy 1 <= i < j, got ({self.i}, {self.j})")


@dataclass(frozen=True)
class BandFactorization:
    """An ordered product of positive bands in ``B_n``."""

    strands: int
    bands: tuple[BandGenerator, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "bands", tuple(_as_band(b) for b in self.bands))
        if self.strands < 1:
            raise DomainError(f"strand count must be >= 1, got {self.strands}")
        for band in self.bands:
            if band.j > self.strands:
                raise DomainError(f"band {band} does not fit in B_{self.strands}")

    def __len__(self) -> int:
        return len(self.bands)


@dataclass(frozen=True)
class QPFactorization:
    """An ordered product of conjugates ``w sigma_k w^{-1}`` in ``B_n``."""

    strands: int
    factors: tuple[tuple[BraidWord, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.strands < 1:
            raise DomainError(f"strand count must be >= 1, got {self.strands}")
        for conjugator, index in self.factors:
            if conjugator.strands != self.strands:
                raise DomainError(
                    f"conjugator on {conjugator.strands} strands used in B_{self.strands}"
                )
            if not 1 <= index <= self.strands - 1:
                raise DomainError(f"generator index {index} out of range for B_{self.strands}")

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class ClosureStats:
    """Combinatorics of the closure: ``permutation[s]`` is the bottom
    position reached by the strand entering top position ``s`` (0-based)."""

    permutation: tuple[int, ...]
    component_count: int
    writhe: int


@dataclass(frozen=True)
class SurfaceStats:
    """Disk-and-band surface statistics for a band presentation."""

    strands: int
    band_count: int
    euler_characteristic: int
    genus: int


def _as_band(band: BandGenerator | tuple[int, int]) -> BandGenerator:
    if isinstance(band, BandGenerator):
        return band
    i, j = band
    return BandGenerator(i, j)


def expand_band(band: BandGenerator | tuple[int, int], strands: int) -> BraidWord:
    """Expand ``sigma_{i,j}`` to its defining word in ``B_strands``.

    The result has ``2(j - i) - 1`` letters and exponent sum ``+1``.

    >>> expand_band((1, 3), 3).letters
    (1, 2, -1)
    """
    band = _as_band(band)
    if band.j > strands:
        raise DomainError(f"band {band} does not fit in B_{strands}")
    prefix = list(range(band.i, band.j - 1))
    letters = prefix + [band.j - 1] + [-k for k in reversed(prefix)]
    return BraidWord(strands, tuple(letters))


def expand_sqp(factorization: BandFactorization) -> BraidWord:
    """Concatenate the expansions of the bands, in order."""
    letters: list[int] = []
    for band in factorization.bands:
        letters.extend(expand_band(band, factorization.strands).letters)
    return BraidWord(factorization.strands, tuple(letters))


def expand_qp(factorization: QPFactorization) -> BraidWord:
    """Concatenate ``w_k sigma_{i_k} w_k^{-1}`` over the factors, in order."""
    letters: list[int] = []
    for conjugator, index in factorization.factors:
        letters.extend(conjugator.letters)
        letters.append(index)
        letters.extend(conjugator.inverse().letters)
    return BraidWord(factorization.strands, tuple(letters))


def band_form_of_positive_word(word: BraidWord) -> BandFactorization:
    """Read a positive word as a band presentation, ``sigma_k = sigma_{k,k+1}``."""
    if not word.is_positive():
        raise DomainError("only positive words are band presentations letter by letter")
    return BandFactorization(word.strands, tuple(BandGenerator(k, k + 1) for k in word.letters))


def qp_form_of_bands(factorization: BandFactorization) -> QPFactorization:
    """Rewrite each band ``sigma_{i,j}`` as the conjugate ``w sigma_{j-1} w^{-1}``
    with ``w = sigma_i ... sigma_{j-2}``."""
    factors = []
    for band in factorization.bands:
        conjugator = BraidWord(factorization.strands, tuple(range(band.i, band.j - 1)))
        factors.append((conjugator, band.j - 1))
    return QPFactorization(factorization.strands, tuple(factors))


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent ``sigma_k sigma_k^{-1}`` pairs until none remain.

    Closure invariants (permutation, exponent sum) are unchanged.
    """
    stack: list[int] = []
    for k in word.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(word.strands, tuple(stack))


def closure_stats(word: BraidWord) -> ClosureStats:
    """Permutation, component count, and writhe of the closure."""
    n = word.strands
    occupant = list(range(n))
    for k in word.letters:
        a = abs(k) - 1
        occupant[a], occupant[a + 1] = occupant[a + 1], occupant[a]
    permutation = [0] * n
    for position, strand in enumerate(occupant):
        permutation[strand] = position
    seen = [False] * n
    components = 0
    for start in range(n):
        if seen[start]:
            continue
        components += 1
        s = start
        while not seen[s]:
            seen[s] = True
            s = permutation[s]
    return ClosureStats(tuple(permutation), components, word.exponent_sum)


def is_knot(word: BraidWord) -> bool:
    return closure_stats(word).component_count == 1


def sqp_surface_stats(factorization: BandFactorization) -> SurfaceStats:
    """Disk-and-band surface statistics; the closure must be a knot.

    ``b`` disks and ``m`` bands give ``chi = b - m`` and, for a knot
    boundary, genus ``(m - b + 1) / 2``.
    """
    word = expand_sqp(factorization)
    stats = closure_stats(word)
    b = factorization.strands
    m = len(factorization.bands)
    if stats.component_count != 1:
        raise NotAKnotError(
            "genus formula requires knot closure; "
            f"this closure has {stats.component_count} components"
        )
    if (m - b + 1) % 2 or m - b + 1 < 0:
        raise InternalConsistencyError(
            f"knot closure with b={b}, m={m} violates the parity of the genus formula"
        )
    return SurfaceStats(b, m, b - m, (m - b + 1) // 2)


def torus_braid(p: int, q: int) -> BraidWord:
    """The standard presentation ``(sigma_1 ... sigma_{p-1})^q`` in ``B_p``.

    The closure is a knot exactly when ``gcd(p, q) = 1``.
    """
    if p < 1 or q < 1:
        raise DomainError(f"torus parameters must be positive, got ({p}, {q})")
    return BraidWord(p, tuple(range(1, p)) * q)


def _bundle_swap_letters(offset: int, width: int) -> list[int]:
    # Positive permutation braid moving a bundle of `width` strands over the
    # next bundle; `offset` strands sit to its left.  width^2 letters.
    letters: list[int] = []
    for a in range(1, width + 1):
        letters.extend(range(offset + width + a - 1, offset + a - 1, -1))
    return letters


def cable_positive_braid(base: BraidWord, p: int, q: int) -> BraidWord | None:
    """Positive presentation of the ``(p, q)``-cable of the closure of ``base``.

    ``q`` is counted against the Seifert framing of the companion.  The
    blackboard ``p``-cable of a positive word with ``e`` letters carries
    framing ``e``, so ``q - p * e`` extra twists go in at the end; when that
    count is negative no positive presentation arises this way and ``None``
    is returned.
    """
    if not base.is_positive():
        raise DomainError("cabling is implemented for positive base words only")
    if p < 2:
        raise DomainError(f"cabling width must be >= 2, got {p}")
    twists = q - p * len(base)
    if twists < 0:
        return None
    letters: list[int] = []
    for k in base.letters:
        letters.extend(_bundle_swap_letters((k - 1) * p, p))
    letters.extend(tuple(range(1, p)) * twists)
    return BraidWord(p * base.strands, tuple(letters))


def iterated_torus_braid(stages: tuple[tuple[int, int], ...]) -> BraidWord | None:
    """Positive braid for the iterated torus knot with cable parameters
    ``(p_i, p_i * n_i + 1)`` read innermost first, or ``None`` when some
    stage would need negative twists."""
    if not stages:
        raise DomainError("at least one cabling stage is required")
    (p0, n0), *rest = stages
    q0 = p0 * n0 + 1
    if q0 < 1:
        return None
    word = torus_braid(p0, q0)
    for p, n in rest:
        result = cable_positive_braid(word, p, p * n + 1)
        if result is None:
            return None
        word = result
    return word


def torus_knot_genus(p: int, q: int) -> int:
    """Seifert genus ``(p-1)(q-1)/2`` of the ``(p, q)`` torus knot."""
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise DomainError(f"({p}, {q}) is not a torus knot parameter pair")
    return (p - 1) * (q - 1) // 2
