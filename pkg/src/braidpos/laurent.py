"""Exact integer Laurent polynomials in one variable, plus matrix determinants.

Coefficients are Python ints, exponents may be negative, and the zero
polynomial has empty support.  Instances are immutable and hashable.
The printing variable is ``T`` to match the report format.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InexactDivisionError


class LaurentPoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        data: dict[int, int] = {}
        for exp, coeff in items:
            if coeff:
                data[exp] = data.get(exp, 0) + coeff
                if not data[exp]:
                    del data[exp]
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def var(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return tuple(sorted(self._coeffs.items()))

    def min_exp(self) -> int:
        if not self._coeffs:
            raise DomainError("the zero polynomial has no support")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if not self._coeffs:
            raise DomainError("the zero polynomial has no support")
        return max(self._coeffs)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        data = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            data[exp] = data.get(exp, 0) + coeff
        return LaurentPoly(data)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        data = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            data[exp] = data.get(exp, 0) - coeff
        return LaurentPoly(data)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        data: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                data[e] = data.get(e, 0) + c1 * c2
        return LaurentPoly(data)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise DomainError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({e: c * v for e, v in self._coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``T^k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``T -> T^{-1}``."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        return self == self.invert_variable()

    def evaluate_unit(self, value: int) -> int:
        """Evaluate at ``T = 1`` or ``T = -1`` (the units of the integers)."""
        if value not in (1, -1):
            raise DomainError("exact evaluation is supported at T = 1 and T = -1 only")
        return sum(c if value == 1 or e % 2 == 0 else -c for e, c in self._coeffs.items())

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises :class:`InexactDivisionError` on remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        a_shift, b_shift = self.min_exp(), other.min_exp()
        a = self._dense(a_shift)
        b = other._dense(b_shift)
        if len(a) < len(b):
            raise InexactDivisionError(f"{other} does not divide {self}")
        remainder = [Fraction(c) for c in a]
        lead = Fraction(b[-1])
        quotient = [Fraction(0)] * (len(a) - len(b) + 1)
        for i in range(len(quotient) - 1, -1, -1):
            c = remainder[i + len(b) - 1] / lead
            quotient[i] = c
            if c:
                for j, bv in enumerate(b):
                    remainder[i + j] -= c * bv
        if any(remainder) or any(c.denominator != 1 for c in quotient):
            raise InexactDivisionError(f"{other} does not divide {self}")
        return LaurentPoly(
            {a_shift - b_shift + i: int(c) for i, c in enumerate(quotient) if c}
        )

    def _dense(self, base: int) -> list[int]:
        top = self.max_exp()
        out = [0] * (top - base + 1)
        for e, c in self._coeffs.items():
            out[e - base] = c
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "T" if e == 1 else f"T^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def laurent_matrix_det(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over the Laurent ring."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise DomainError("determinant requires a square matrix")
    if n == 0:
        return LaurentPoly.one()
    a = [list(row) for row in rows]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det
