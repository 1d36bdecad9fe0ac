"""Bicomplex Moebius transformations ``w -> (a*w + b) / (c*w + d)``.

The map acts on each idempotent component as an ordinary complex Moebius map,
so evaluation, composition and fixed-point work all factor through
:class:`ComponentMobius`.  Transforms are stored unnormalized and compared
projectively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .core import DEFAULT_EPS, ONE, ZERO, Bicomplex, as_bicomplex, is_singular
from .extended import INF, ExtComplex, ExtendedBicomplex, lift
from .literal import format as _literal


class DegenerateDeterminant(ValueError):
    """``ad - bc`` lies in the null cone, so the map is not invertible."""


class CNotInvertible(ValueError):
    """Generator decomposition needs ``c`` with both components nonzero."""


def _near_zero(value: complex, scale: float, eps: float) -> bool:
    return abs(value) <= eps * scale if eps else value == 0


@dataclass(frozen=True)
class ComponentMobius:
    """A complex Moebius map on one idempotent component."""

    a: complex
    b: complex
    c: complex
    d: complex
    eps: float = field(default=DEFAULT_EPS, compare=False)

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.det == 0:
            raise DegenerateDeterminant(f"component determinant vanishes: {self}")

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def is_affine(self) -> bool:
        """``c`` is zero relative to the other coefficients, so INF is fixed."""
        return _near_zero(self.c, max(abs(self.a), abs(self.b), abs(self.d)), self.eps)

    def __call__(self, z: ExtComplex) -> ExtComplex:
        a, b, c, d = self.a, self.b, self.c, self.d
        if z is INF:
            return INF if self.is_affine else a / c
        cz = c * z
        den = cz + d
        # the pole -d/c is only hit to rounding, so test relative to the summands
        if _near_zero(den, max(abs(cz), abs(d)), self.eps):
            return INF
        return (a * z + b) / den


@dataclass(frozen=True, eq=False)
class MobiusTransform:
    a: Bicomplex
    b: Bicomplex
    c: Bicomplex
    d: Bicomplex
    eps: float = DEFAULT_EPS
    strict: bool = False

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, as_bicomplex(getattr(self, name)))
        if is_singular(self.det, self.eps):
            raise DegenerateDeterminant(f"ad - bc = {_literal(self.det)} is in the null cone")
        if self.strict:
            # literal reading: no coefficient may be a (nonzero) zero divisor
            for name in "abcd":
                w = getattr(self, name)
                if w != ZERO and is_singular(w, self.eps):
                    raise DegenerateDeterminant(f"coefficient {name} is a zero divisor")

    @property
    def det(self) -> Bicomplex:
        return self.a * self.d - self.b * self.c

    @property
    def coefficients(self) -> tuple[Bicomplex, Bicomplex, Bicomplex, Bicomplex]:
        return self.a, self.b, self.c, self.d

    def component(self, index: int) -> ComponentMobius:
        """The complex Moebius map on idempotent component 1 or 2."""
        if index not in (1, 2):
            raise ValueError("component index must be 1 or 2")
        attr = f"p{index}"
        return ComponentMobius(*(getattr(w, attr) for w in self.coefficients), eps=self.eps)

    @property
    def components(self) -> tuple[ComponentMobius, ComponentMobius]:
        return self.component(1), self.component(2)

    def __call__(self, w: Bicomplex | ExtendedBicomplex) -> ExtendedBicomplex:
        return evaluate(self, w)

    def __matmul__(self, other: MobiusTransform) -> MobiusTransform:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"MobiusTransform(a={self.a!r}, b={self.b!r}, c={self.c!r}, d={self.d!r})"


Coefficient = Union[Bicomplex, int, float, complex]


def make_transform(
    a: Coefficient,
    b: Coefficient,
    c: Coefficient,
    d: Coefficient,
    eps: float = DEFAULT_EPS,
    strict: bool = False,
) -> MobiusTransform:
    return MobiusTransform(a, b, c, d, eps=eps, strict=strict)


def identity() -> MobiusTransform:
    return MobiusTransform(ONE, ZERO, ZERO, ONE)


def translation(shift: Coefficient) -> MobiusTransform:
    return MobiusTransform(ONE, shift, ZERO, ONE)


def dilation(factor: Coefficient) -> MobiusTransform:
    return MobiusTransform(factor, ZERO, ZERO, ONE)


def inversion() -> MobiusTransform:
    return MobiusTransform(ZERO, ONE, ONE, ZERO)


def evaluate(S: MobiusTransform, w: Bicomplex | ExtendedBicomplex) -> ExtendedBicomplex:
    """Apply ``S`` on the extended plane, one idempotent component at a time."""
    w = lift(w)
    m1, m2 = S.components
    return ExtendedBicomplex(m1(w.p1), m2(w.p2))


def compose(S1: MobiusTransform, S2: MobiusTransform) -> MobiusTransform:
    """``S1 o S2`` via the product of the coefficient matrices."""
    a1, b1, c1, d1 = S1.coefficients
    a2, b2, c2, d2 = S2.coefficients
    return MobiusTransform(
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
        eps=S1.eps,
        strict=S1.strict and S2.strict,
    )


def invert_transform(S: MobiusTransform) -> MobiusTransform:
    return MobiusTransform(S.d, -S.b, -S.c, S.a, eps=S.eps, strict=S.strict)


def projectively_equal(S1: MobiusTransform, S2: MobiusTransform, tol: float = 1e-9) -> bool:
    """True when, per component, the coefficient quadruples are proportional.

    Every 2x2 minor of the stacked quadruples must vanish to within
    ``tol * |u| * |v|``, which makes the test invariant under rescaling either
    transform by a nonsingular factor.
    """
    for idx in (1, 2):
        u = [getattr(w, f"p{idx}") for w in S1.coefficients]
        v = [getattr(w, f"p{idx}") for w in S2.coefficients]
        bound = tol * math.hypot(*map(abs, u)) * math.hypot(*map(abs, v))
        for i in range(4):
            for k in range(i + 1, 4):
                if abs(u[i] * v[k] - u[k] * v[i]) > bound:
                    return False
    return True


def decompose_generators(S: MobiusTransform) -> tuple[MobiusTransform, ...]:
    """Split ``S`` into translation, inversion, dilation, translation.

    Returns ``(S1, S2, S3, S4)`` in application order, so that
    ``S == S4 o S3 o S2 o S1`` projectively, with ``S1(w) = w + d/c``,
    ``S2(w) = 1/w``, ``S3(w) = ((bc - ad)/c**2) w`` and ``S4(w) = w + a/c``.
    """
    a, b, c, d = S.coefficients
    if is_singular(c, S.eps):
        raise CNotInvertible(f"c = {_literal(c)} has a vanishing idempotent component")
    inv_c = 1 / c
    return (
        translation(d * inv_c),
        inversion(),
        dilation((b * c - a * d) * inv_c * inv_c),
        translation(a * inv_c),
    )


def decompose_affine(S: MobiusTransform) -> tuple[MobiusTransform, ...]:
    """For ``c == 0``: ``S == translation(b/d) o dilation(a/d)``.

    Returned in application order ``(dilation, translation)``.
    """
    a, b, c, d = S.coefficients
    if c != ZERO:
        raise ValueError("affine decomposition requires c == 0")
    return dilation(a / d), translation(b / d)


@dataclass(frozen=True)
class OrbitTrace:
    points: tuple[ExtendedBicomplex, ...]
    converged: bool

    @property
    def steps(self) -> int:
        return len(self.points) - 1

    @property
    def last(self) -> ExtendedBicomplex:
        return self.points[-1]


def _settled(old: ExtComplex, new: ExtComplex, tol: float) -> bool:
    if old is INF or new is INF:
        return old is new
    return abs(new - old) < tol


def orbit(
    S: MobiusTransform,
    w0: Bicomplex | ExtendedBicomplex,
    n: int = 100,
    tol: float = 1e-12,
) -> OrbitTrace:
    """Iterate ``S`` from ``w0`` for at most ``n`` steps.

    Stops early once both components move by less than ``tol``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    points = [lift(w0)]
    for _ in range(n):
        prev = points[-1]
        nxt = evaluate(S, prev)
        points.append(nxt)
        if _settled(prev.p1, nxt.p1, tol) and _settled(prev.p2, nxt.p2, tol):
            return OrbitTrace(tuple(points), True)
    return OrbitTrace(tuple(points), False)
