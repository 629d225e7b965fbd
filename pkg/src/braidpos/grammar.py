"""Text grammars for braid words and knot expressions.

Braid words::

    word    := token* ("@" INT)?
    token   := "s" INT "'"?          Artin generator, "'" for the inverse
             | "b" INT "," INT       positive band sigma_{i,j}, expanded on parse
             | "^" INT               repeat the preceding token INT times

    "s1^3 @2"             sigma_1^3 in B_2
    "b2,5 b1,5 @5"        two bands in B_5

Whitespace is ignored between tokens.  Without "@n" the strand count is
the smallest one that fits every index.  A word whose tokens are all
bands or positive generators remembers its band presentation.

Knot expressions::

    expr    := term ("#" term)*
    term    := primary flag*
    primary := "T" "(" INT "," INT ")"
             | "cable" "[" "(" INT "," INT ")" ("," "(" INT "," INT ")")* "]"
             | "twist" "(" INT ")"
             | "wh+" "(" expr ";" INT ")"
             | "mirror" "(" expr ")"
             | "closure" "(" STRING ")"
    flag    := "{fibered}" | "{alternating}" | "{tb=" INT "}"
             | "{g4=" INT "}" | "{genus=" INT "}"

``format_braid`` / ``format_expression`` print canonical forms that parse
back to equal values.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .braids import BandFactorization, BandGenerator, BraidWord, expand_band
from .errors import DomainError, ParseError
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
    strip_assertions,
)


@dataclass(frozen=True)
class ParsedBraid:
    word: BraidWord
    bands: BandFactorization | None


# ---------------------------------------------------------------------------
# Braid words


def parse_braid(text: str, offset: int = 0) -> ParsedBraid:
    """Parse braid text, keeping the band presentation when one is visible."""
    i = 0
    n = len(text)
    groups: list[tuple[tuple[int, ...], BandGenerator | None]] = []
    explicit_strands: int | None = None

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int() -> int:
        nonlocal i
        skip_ws()
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected a number", offset + start)
        return int(text[start:i])

    while True:
        skip_ws()
        if i >= n:
            break
        pos = i
        ch = text[i]
        if ch == "s":
            i += 1
            index = read_int()
            negative = i < n and text[i] == "'"
            if negative:
                i += 1
            if index < 1:
                raise ParseError("generator index must be >= 1", offset + pos)
            letter = -index if negative else index
            band = None if negative else BandGenerator(index, index + 1)
            groups.append(((letter,), band))
        elif ch == "b":
            i += 1
            lo = read_int()
            skip_ws()
            if i >= n or text[i] != ",":
                raise ParseError("expected ',' in band generator", offset + i)
            i += 1
            skip_ws()
            hi = read_int()
            if not 1 <= lo < hi:
                raise ParseError(f"band b{lo},{hi} needs 1 <= i < j", offset + pos)
            band = BandGenerator(lo, hi)
            groups.append((expand_band(band, hi).letters, band))
        elif ch == "^":
            i += 1
            count = read_int()
            if count < 1:
                raise ParseError("repeat count must be >= 1", offset + pos)
            if not groups:
                raise ParseError("'^' must follow a generator token", offset + pos)
            groups.extend([groups[-1]] * (count - 1))
        elif ch == "@":
            i += 1
            explicit_strands = read_int()
            if explicit_strands < 1:
                raise ParseError("strand count must be >= 1", offset + pos)
            skip_ws()
            if i < n:
                raise ParseError("'@n' must be the final token", offset + i)
            break
        else:
            raise ParseError(f"unexpected character {ch!r}", offset + pos)

    letters: list[int] = []
    bands: list[BandGenerator] | None = []
    needed = 1
    for group_letters, band in groups:
        letters.extend(group_letters)
        needed = max(needed, max(abs(k) for k in group_letters) + 1)
        if bands is not None and band is not None:
            bands.append(band)
        else:
            bands = None

    strands = explicit_strands if explicit_strands is not None else needed
    if strands < needed:
        raise ParseError(
            f"word needs at least {needed} strands but @{strands} was given", offset
        )
    word = BraidWord(strands, tuple(letters))
    factorization = (
        BandFactorization(strands, tuple(bands)) if bands is not None else None
    )
    return ParsedBraid(word, factorization)


def parse_braid_text(text: str) -> BraidWord:
    """Parse braid text to a :class:`BraidWord`."""
    return parse_braid(text).word


def format_braid(word: BraidWord) -> str:
    """Canonical letter-by-letter form, always with an explicit '@n'."""
    tokens = [f"s{abs(k)}'" if k < 0 else f"s{k}" for k in word.letters]
    tokens.append(f"@{word.strands}")
    return " ".join(tokens)


def format_bands(factorization: BandFactorization) -> str:
    tokens = [f"b{band.i},{band.j}" for band in factorization.bands]
    tokens.append(f"@{factorization.strands}")
    return " ".join(tokens)


# ---------------------------------------------------------------------------
# Knot expressions


_FLAG_NAMES = ("fibered", "alternating", "tb", "g4", "genus")


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.i if pos is None else pos)

    def skip_ws(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.i += 1

    def read_int(self) -> int:
        self.skip_ws()
        start = self.i
        if self.i < len(self.text) and self.text[self.i] == "-":
            self.i += 1
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start or self.text[start:self.i] == "-":
            raise self.error("expected an integer", start)
        return int(self.text[start:self.i])

    def read_name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.i
        if self.i < len(self.text) and self.text[self.i].isalpha():
            self.i += 1
            while self.i < len(self.text) and self.text[self.i].isalnum():
                self.i += 1
        if self.i == start:
            raise self.error("expected a name", start)
        name = self.text[start:self.i]
        if name == "wh" and self.i < len(self.text) and self.text[self.i] == "+":
            self.i += 1
            name = "wh+"
        return name, start

    def read_string(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.i
        if self.peek() != '"':
            raise self.error('expected a quoted braid word')
        self.i += 1
        body_start = self.i
        while self.i < len(self.text) and self.text[self.i] != '"':
            self.i += 1
        if self.i >= len(self.text):
            raise self.error("unterminated string", start)
        body = self.text[body_start:self.i]
        self.i += 1
        return body, body_start

    def parse_sum(self) -> KnotExpression:
        terms = [self.parse_term()]
        while self.peek() == "#":
            self.i += 1
            terms.append(self.parse_term())
        if len(terms) == 1:
            return terms[0]
        return ConnectedSum(tuple(terms))

    def parse_term(self) -> KnotExpression:
        node = self.parse_primary()
        fields: dict[str, object] = {}
        while self.peek() == "{":
            pos = self.i
            self.i += 1
            name, _ = self.read_name()
            if name not in _FLAG_NAMES:
                raise self.error(f"unknown flag {name!r}", pos)
            if name in ("fibered", "alternating"):
                value: object = True
            else:
                self.expect("=")
                value = self.read_int()
            if name in fields:
                raise self.error(f"duplicate flag {name!r}", pos)
            fields[name] = value
            self.expect("}")
        if fields:
            node = replace(node, asserted=Assertions(**fields))  # type: ignore[arg-type]
        return node

    def parse_primary(self) -> KnotExpression:
        name, pos = self.read_name()
        if name == "T":
            self.expect("(")
            p = self.read_int()
            self.expect(",")
            q = self.read_int()
            self.expect(")")
            return Torus(p, q)
        if name == "cable":
            self.expect("[")
            stages = [self._parse_stage()]
            while self.peek() == ",":
                self.i += 1
                stages.append(self._parse_stage())
            self.expect("]")
            return IteratedTorus(tuple(stages))
        if name == "twist":
            self.expect("(")
            n = self.read_int()
            self.expect(")")
            return TwistKnot(n)
        if name == "wh+":
            self.expect("(")
            inner = self.parse_sum()
            self.expect(";")
            n = self.read_int()
            self.expect(")")
            return WhiteheadDouble(inner, n)
        if name == "mirror":
            self.expect("(")
            inner = self.parse_sum()
            self.expect(")")
            return Mirror(inner)
        if name == "closure":
            self.expect("(")
            body, body_pos = self.read_string()
            self.expect(")")
            parsed = parse_braid(body, offset=body_pos)
            try:
                return BraidClosure(parsed.word, bands=parsed.bands)
            except DomainError as exc:
                raise ParseError(str(exc), body_pos) from exc
        raise self.error(f"unknown construction {name!r}", pos)

    def _parse_stage(self) -> tuple[int, int]:
        self.expect("(")
        p = self.read_int()
        self.expect(",")
        n = self.read_int()
        self.expect(")")
        return p, n


def parse_expression_text(text: str) -> KnotExpression:
    parser = _ExprParser(text)
    expr = parser.parse_sum()
    parser.skip_ws()
    if parser.i < len(text):
        raise parser.error("trailing input after expression")
    return expr


def _format_assertions(asserted: Assertions) -> str:
    parts = []
    if asserted.fibered:
        parts.append("{fibered}")
    if asserted.alternating:
        parts.append("{alternating}")
    if asserted.tb is not None:
        parts.append(f"{{tb={asserted.tb}}}")
    if asserted.g4 is not None:
        parts.append(f"{{g4={asserted.g4}}}")
    if asserted.genus is not None:
        parts.append(f"{{genus={asserted.genus}}}")
    return (" " + " ".join(parts)) if parts else ""


def format_expression(expr: KnotExpression) -> str:
    """Canonical text form; parseable trees round-trip exactly."""
    suffix = _format_assertions(expr.asserted)
    if isinstance(expr, Torus):
        return f"T({expr.p},{expr.q})" + suffix
    if isinstance(expr, IteratedTorus):
        stages = ",".join(f"({p},{n})" for p, n in expr.stages)
        return f"cable[{stages}]" + suffix
    if isinstance(expr, TwistKnot):
        return f"twist({expr.n})" + suffix
    if isinstance(expr, WhiteheadDouble):
        return f"wh+({format_expression(expr.companion)}; {expr.n})" + suffix
    if isinstance(expr, ConnectedSum):
        return " # ".join(format_expression(s) for s in expr.summands) + suffix
    if isinstance(expr, Mirror):
        return f"mirror({format_expression(expr.inner)})" + suffix
    if isinstance(expr, BraidClosure):
        if expr.bands is not None and any(b.j > b.i + 1 for b in expr.bands.bands):
            body = format_bands(expr.bands)
        else:
            body = format_braid(expr.word)
        return f'closure("{body}")' + suffix
    raise DomainError(f"unknown expression node {type(expr).__name__}")


def canonical_name(expr: KnotExpression) -> str:
    """Assertion-free canonical form, the key used by TB tables."""
    return format_expression(strip_assertions(expr))
