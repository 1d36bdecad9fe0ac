"""Text literals for bicomplex values.

Two ASCII forms are accepted::

    1+2i1+3i2+4j        cartesian: x1 + x2*i1 + x3*i2 + x4*j
    [1+2i, inf]         idempotent: [P1, P2], each a complex number or inf

Inside brackets ``i`` is i1, since only C(i1) values occur there.  ``inf`` is
a whole component, never a summand, and only the idempotent form can hold it.
"""

from __future__ import annotations

import math
from typing import Optional

from .core import Bicomplex, from_four_reals
from .extended import INF, ExtComplex, ExtendedBicomplex, lift

NUMBER = "number"
END = "end of input"
UNITS = ("i1", "i2", "j")


class ParseError(ValueError):
    def __init__(self, text: str, index: int, expected):
        self.text = text
        self.offset = len(text[:index].encode("utf-8"))
        self.expected = tuple(sorted(expected))
        found = repr(text[index]) if index < len(text) else END
        super().__init__(
            f"byte {self.offset}: expected {' or '.join(self.expected)}, found {found}"
        )


class CartesianInfinity(ValueError):
    """An element with an infinite component has no cartesian literal."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, expected, at: Optional[int] = None):
        raise ParseError(self.text, self.pos if at is None else at, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self) -> int:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        return self.pos - start

    def number(self) -> Optional[float]:
        start = self.pos
        n = self.digits()
        if self.peek() == ".":
            self.pos += 1
            n += self.digits()
            if n == 0:
                self.fail({"digit"})
        elif n == 0:
            return None
        if self.peek() in ("e", "E"):
            self.pos += 1
            if self.peek() in ("+", "-"):
                self.pos += 1
            if not self.digits():
                self.fail({"digit"})
        value = float(self.text[start : self.pos])
        if math.isinf(value):
            raise OverflowError(f"number out of range at byte {start}: {self.text[start:self.pos]}")
        return value

    def sign(self) -> Optional[float]:
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            self.skip_ws()
            return -1.0 if ch == "-" else 1.0
        return None

    # cartesian ---------------------------------------------------------
    def unit(self) -> Optional[int]:
        ch = self.peek()
        if ch == "j":
            self.pos += 1
            return 3
        if ch == "i":
            nxt = self.text[self.pos + 1 : self.pos + 2]
            if nxt not in ("1", "2"):
                self.fail({"1", "2"}, self.pos + 1)
            self.pos += 2
            return 1 if nxt == "1" else 2
        return None

    def cartesian(self) -> list[float]:
        coords = [0.0, 0.0, 0.0, 0.0]
        first = True
        while True:
            self.skip_ws()
            if not first:
                if self.peek() not in ("+", "-"):
                    break
            s = self.sign()
            value = self.number()
            if value is not None:
                self.skip_ws()
            idx = self.unit()
            if value is None and idx is None:
                self.fail({NUMBER, *UNITS, "["} if first and s is None else {NUMBER, *UNITS})
            coords[idx or 0] += (s or 1.0) * (1.0 if value is None else value)
            first = False
        return coords

    # idempotent --------------------------------------------------------
    def complex_(self) -> complex:
        re = im = 0.0
        first = True
        while True:
            self.skip_ws()
            if not first:
                if self.peek() not in ("+", "-"):
                    break
            s = self.sign() or 1.0
            value = self.number()
            if value is not None:
                self.skip_ws()
            if value is None and self.text.startswith("inf", self.pos):
                # inf is a whole component, never a summand
                self.fail({NUMBER, "i"})
            if self.peek() == "i":
                self.pos += 1
                im += s * (1.0 if value is None else value)
            elif value is None:
                self.fail({NUMBER, "i", "inf"} if first else {NUMBER, "i"})
            else:
                re += s * value
            first = False
        return complex(re, im)

    def extcomplex(self) -> ExtComplex:
        self.skip_ws()
        if self.text.startswith("inf", self.pos):
            self.pos += 3
            self.skip_ws()
            return INF
        return self.complex_()

    def expect(self, token: str) -> None:
        self.skip_ws()
        if self.peek() != token:
            self.fail({token})
        self.pos += 1

    def idempotent(self) -> tuple[ExtComplex, ExtComplex]:
        self.expect("[")
        p1 = self.extcomplex()
        self.expect(",")
        p2 = self.extcomplex()
        self.expect("]")
        return p1, p2

    def end(self, expected) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(expected)


def _finite(values, text):
    if not all(math.isfinite(v) for v in values):
        raise OverflowError(f"literal {text!r} is out of floating-point range")


def parse(text: str) -> ExtendedBicomplex:
    """Parse a cartesian or idempotent literal."""
    p = _Parser(text)
    p.skip_ws()
    if p.peek() == "[":
        p1, p2 = p.idempotent()
        p.end({END})
        for z in (p1, p2):
            if z is not INF:
                _finite((z.real, z.imag), text)
        return ExtendedBicomplex(p1, p2)
    coords = p.cartesian()
    p.end({"+", "-", END})
    _finite(coords, text)
    try:
        return lift(from_four_reals(*coords))
    except ValueError:
        raise OverflowError(f"literal {text!r} is out of floating-point range") from None


def parse_component(text: str) -> ExtComplex:
    """Parse a single idempotent component such as ``2-1.5i`` or ``inf``."""
    p = _Parser(text)
    z = p.extcomplex()
    p.end({"+", "-", END})
    if z is not INF:
        _finite((z.real, z.imag), text)
    return z


def parse_finite(text: str) -> Bicomplex:
    w = parse(text)
    if not w.is_finite:
        raise ValueError(f"{text!r} is not a finite bicomplex value")
    return w.to_bicomplex()


def format_number(x: float) -> str:
    r = repr(float(x) + 0.0)
    return r[:-2] if r.endswith(".0") else r


def format_component(z: ExtComplex) -> str:
    if z is INF:
        return "inf"
    re, im = z.real, z.imag
    if im == 0:
        return format_number(re)
    if re == 0:
        return f"{format_number(im)}i"
    op = "+" if im > 0 else ""
    return f"{format_number(re)}{op}{format_number(im)}i"


def format(w, style: str = "idempotent") -> str:  # noqa: A001 - mirrors parse()
    w = lift(w)
    if style == "idempotent":
        return f"[{format_component(w.p1)}, {format_component(w.p2)}]"
    if style != "cartesian":
        raise ValueError(f"unknown style {style!r}")
    if not w.is_finite:
        raise CartesianInfinity(f"{format(w)} has an infinite component")
    terms = []
    for x, unit in zip(w.to_bicomplex().coords, ("",) + UNITS):
        if x != 0:
            terms.append(format_number(x) + unit)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out
