"""Data model and parser for products of the four classical families.

An expression denotes a finite product of irreducible compact Hermitian
symmetric spaces:

    expr := term (("x" | "*") term)*
    term := atom ("^" exponent)?
    atom := "I(" k "," s ")" | "II(" s ")" | "III(" s ")" | "IV(" s ")"
          | "CP(" n ")" | "(" expr ")"

Whitespace is insignificant.  ``CP(n)`` is sugar for ``I(1, n+1)`` and
an exponent repeats a factor (capped at 64 so a typo cannot allocate an
absurd product).  ``parse`` returns the canonical form, which is also
the key format used by every report, table and refinement file.
"""

from __future__ import annotations

from dataclasses import dataclass

_KIND_ORDER = {"I": 0, "II": 1, "III": 2, "IV": 3}
_MAX_EXPONENT = 64


class SpaceSyntaxError(ValueError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidParams(ValueError):
    """Structurally valid expression with out-of-range parameters."""


class EmptyProduct(ValueError):
    """A space expression needs at least one factor."""


@dataclass(frozen=True)
class IrreducibleSpace:
    """One irreducible factor: kind "I", "II", "III" or "IV" plus its
    integer parameters ((k, s) for type I, (s,) for the others)."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind == "I":
            if len(self.params) != 2:
                raise InvalidParams(f"type I takes (k, s), got {self.params}")
            k, s = self.params
            if s < 2 or not 1 <= k <= s - 1:
                raise InvalidParams(
                    f"type I requires 1 <= k <= s-1 and s >= 2, got k={k}, s={s}"
                )
        elif self.kind in ("II", "III", "IV"):
            if len(self.params) != 1:
                raise InvalidParams(f"type {self.kind} takes (s,), got {self.params}")
            (s,) = self.params
            least = 2 if self.kind == "II" else 1
            if s < least:
                raise InvalidParams(f"type {self.kind} requires s >= {least}, got s={s}")
        else:
            raise InvalidParams(f"unknown space kind {self.kind!r}")

    @property
    def dimension(self) -> int:
        """Complex dimension."""
        if self.kind == "I":
            k, s = self.params
            return (s - k) * k
        (s,) = self.params
        if self.kind == "II":
            return s * (s - 1) // 2
        if self.kind == "III":
            return s * (s + 1) // 2
        return s

    @property
    def rank(self) -> int:
        """Symmetric-space rank (assumes canonical form for type IV)."""
        if self.kind == "I":
            k, s = self.params
            return min(k, s - k)
        (s,) = self.params
        if self.kind == "II":
            return s // 2
        if self.kind == "III":
            return s
        return 2

    def render(self) -> str:
        return f"{self.kind}({','.join(str(p) for p in self.params)})"

    def __str__(self) -> str:
        return self.render()


def type_i(k: int, s: int) -> IrreducibleSpace:
    return IrreducibleSpace("I", (k, s))


def type_ii(s: int) -> IrreducibleSpace:
    return IrreducibleSpace("II", (s,))


def type_iii(s: int) -> IrreducibleSpace:
    return IrreducibleSpace("III", (s,))


def type_iv(s: int) -> IrreducibleSpace:
    return IrreducibleSpace("IV", (s,))


def projective_space(n: int) -> IrreducibleSpace:
    """CP(n) in its type I incarnation I(1, n+1)."""
    if n < 1:
        raise InvalidParams(f"CP(n) requires n >= 1, got n={n}")
    return type_i(1, n + 1)


def _sort_key(factor: IrreducibleSpace) -> tuple[int, tuple[int, ...]]:
    return (_KIND_ORDER[factor.kind], factor.params)


@dataclass(frozen=True)
class SpaceExpr:
    """A finite product of irreducible factors (possibly just one)."""

    factors: tuple[IrreducibleSpace, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise EmptyProduct("a space expression needs at least one factor")

    @property
    def dimension(self) -> int:
        return sum(f.dimension for f in self.factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def canonicalize(self) -> SpaceExpr:
        """Rewrite to the unique canonical form.  Idempotent.

        Type I factors take k <= s-k (both labellings name the same
        Grassmannian and the degree formula is symmetric in them),
        IV(1) becomes I(1,2), IV(2) splits into I(1,2) x I(1,2), and
        factors are sorted by (kind, params).
        """
        rewritten: list[IrreducibleSpace] = []
        for f in self.factors:
            if f.kind == "I":
                k, s = f.params
                rewritten.append(type_i(min(k, s - k), s))
            elif f.kind == "IV" and f.params[0] == 1:
                rewritten.append(type_i(1, 2))
            elif f.kind == "IV" and f.params[0] == 2:
                rewritten.extend((type_i(1, 2), type_i(1, 2)))
            else:
                rewritten.append(f)
        rewritten.sort(key=_sort_key)
        return SpaceExpr(tuple(rewritten))

    @property
    def is_canonical(self) -> bool:
        return self == self.canonicalize()

    def render(self) -> str:
        """Canonical key format, e.g. ``I(1,2) x I(2,4)``."""
        return " x ".join(f.render() for f in self.factors)

    def __str__(self) -> str:
        return self.render()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: int | None = None) -> SpaceSyntaxError:
        return SpaceSyntaxError(message, self.pos if position is None else position)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> None:
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, got {got}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        text = self.text[start : self.pos]
        if not text or text == "-":
            raise self.error("expected an integer", start)
        return int(text)

    def expr(self) -> list[IrreducibleSpace]:
        factors = self.term()
        while True:
            self.skip_ws()
            if self.peek() in ("x", "*"):
                self.pos += 1
                factors.extend(self.term())
            else:
                return factors

    def term(self) -> list[IrreducibleSpace]:
        factors = self.atom()
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            count = self.integer()
            if not 1 <= count <= _MAX_EXPONENT:
                raise InvalidParams(
                    f"exponent must be between 1 and {_MAX_EXPONENT}, got {count}"
                )
            factors = factors * count
        return factors

    def atom(self) -> list[IrreducibleSpace]:
        self.skip_ws()
        if self.peek() == "(":
            self.pos += 1
            inner = self.expr()
            self.skip_ws()
            self.eat(")")
            return inner
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        word = self.text[start : self.pos]
        if word not in ("I", "II", "III", "IV", "CP"):
            got = repr(word) if word else (repr(self.peek()) if self.peek() else "end of input")
            raise self.error(f"expected a space atom (I/II/III/IV/CP or parenthesis), got {got}", start)
        self.skip_ws()
        self.eat("(")
        if word == "I":
            k = self.integer()
            self.skip_ws()
            self.eat(",")
            s = self.integer()
            factor = type_i(k, s)
        elif word == "CP":
            factor = projective_space(self.integer())
        else:
            factor = IrreducibleSpace(word, (self.integer(),))
        self.skip_ws()
        self.eat(")")
        return [factor]


def parse(text: str) -> SpaceExpr:
    """Parse an expression and return its canonical form.

    Raises SpaceSyntaxError (with position) on malformed text,
    InvalidParams on out-of-range parameters, EmptyProduct on blank
    input.
    """
    parser = _Parser(text)
    parser.skip_ws()
    if parser.pos == len(text):
        raise EmptyProduct("empty expression")
    factors = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error(f"unexpected {text[parser.pos]!r}")
    return SpaceExpr(tuple(factors)).canonicalize()
