"""Legendrian front statistics of a braid closure and Bennequin-type bounds.

A braid closure is Legendrianized template-first: the closure of the
trivial ``b``-strand braid contributes ``b`` left cusps (all "up" cusps)
and ``tb = -b``.  Each positive generator then adds ``+1`` to ``tb`` and
leaves ``|rot|`` alone, while each negative generator adds ``-2`` to
``tb`` and ``+1`` to ``|rot|`` (it contributes one more left cusp, a
"down" one).  Only the cusp counts are tracked; no front geometry is
built, since every consumer needs just the numbers

    tb  = writhe - #left cusps = -b + n_plus - 2 * n_minus,
    |rot| = n_minus.

Rotation numbers are reported as absolute values only; a signed value
would need an orientation convention that nothing downstream consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, closure_stats
from .errors import NotAKnotError


@dataclass(frozen=True)
class FrontStats:
    """Cusp and crossing counts of the Legendrianized closure."""

    strands: int
    n_plus: int
    n_minus: int
    left_cusps: int
    down_left_cusps: int
    up_right_cusps: int
    writhe: int

    @property
    def tb(self) -> int:
        """Thurston-Bennequin number: writhe minus left cusps."""
        return self.writhe - self.left_cusps

    @property
    def rot_abs(self) -> int:
        """|rotation number| = |down left cusps - up right cusps|."""
        return abs(self.down_left_cusps - self.up_right_cusps)


def legendrianize(word: BraidWord) -> FrontStats:
    """Front statistics of the Legendrianized closure; knots only.

    >>> legendrianize(BraidWord(2, (1, 1, 1))).tb
    1
    """
    stats = closure_stats(word)
    if stats.component_count != 1:
        raise NotAKnotError(
            "tb and rot are defined here for knot closures; "
            f"this closure has {stats.component_count} components"
        )
    n_plus = sum(1 for k in word.letters if k > 0)
    n_minus = len(word.letters) - n_plus
    return FrontStats(
        strands=word.strands,
        n_plus=n_plus,
        n_minus=n_minus,
        left_cusps=word.strands + n_minus,
        down_left_cusps=n_minus,
        up_right_cusps=0,
        writhe=stats.writhe,
    )


def bennequin_sum(word: BraidWord) -> int:
    """``tb + |rot|``, which collapses to ``-b + writhe``."""
    front = legendrianize(word)
    return front.tb + front.rot_abs


def slice_genus_lower_bound(word: BraidWord) -> int:
    """Slice-Bennequin bound: ``ceil((tb + |rot| + 1) / 2) <= g4``."""
    return -(-(bennequin_sum(word) + 1) // 2)


def tau_lower_bound(word: BraidWord) -> int:
    """Same arithmetic, bounding the concordance invariant tau from below."""
    return slice_genus_lower_bound(word)
