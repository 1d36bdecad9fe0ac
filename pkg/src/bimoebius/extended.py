"""The extended bicomplex plane: T together with its infinity set.

Each idempotent component is a point of the one-point compactified plane,
either a finite ``complex`` or the unsigned :data:`INF`.  Only inversion and
Moebius evaluation consume infinite components; there is deliberately no
arithmetic between extended elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .core import DEFAULT_EPS, Bicomplex, _clean, euclid_norm


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtComplex = Union[complex, _Infinity]


def is_inf(z: ExtComplex) -> bool:
    return z is INF


def _component(z) -> ExtComplex:
    if z is INF:
        return INF
    return _clean(z)


@dataclass(frozen=True)
class ExtendedBicomplex:
    p1: ExtComplex
    p2: ExtComplex

    def __post_init__(self) -> None:
        object.__setattr__(self, "p1", _component(self.p1))
        object.__setattr__(self, "p2", _component(self.p2))

    @property
    def is_finite(self) -> bool:
        return self.p1 is not INF and self.p2 is not INF

    def components(self) -> tuple[ExtComplex, ExtComplex]:
        return self.p1, self.p2

    def to_bicomplex(self) -> Bicomplex:
        if not self.is_finite:
            raise ValueError(f"{self!r} has an infinite component")
        return Bicomplex(self.p1, self.p2)

    @classmethod
    def from_bicomplex(cls, w: Bicomplex) -> ExtendedBicomplex:
        return cls(w.p1, w.p2)


STRONG_INFINITY = ExtendedBicomplex(INF, INF)


def lift(w: Bicomplex | ExtendedBicomplex) -> ExtendedBicomplex:
    if isinstance(w, ExtendedBicomplex):
        return w
    if isinstance(w, Bicomplex):
        return ExtendedBicomplex(w.p1, w.p2)
    raise TypeError(f"expected a bicomplex value, got {type(w).__name__}")


class ElementClass(str, Enum):
    FINITE_NONSINGULAR = "FiniteNonsingular"
    ZERO = "Zero"
    P1_ZERO = "P1Zero"
    P2_ZERO = "P2Zero"
    P1_INFINITY = "P1Infinity"
    P2_INFINITY = "P2Infinity"
    STRONG_INFINITY = "StrongInfinity"


def classify(w: Bicomplex | ExtendedBicomplex, eps: float = DEFAULT_EPS) -> ElementClass:
    if eps < 0:
        raise ValueError("eps must be non-negative")
    w = lift(w)
    if w.p1 is INF:
        return ElementClass.STRONG_INFINITY if w.p2 is INF else ElementClass.P1_INFINITY
    if w.p2 is INF:
        return ElementClass.P2_INFINITY
    scale = eps * max(1.0, euclid_norm(w.to_bicomplex()))
    zero1 = abs(w.p1) <= scale
    zero2 = abs(w.p2) <= scale
    if zero1 and zero2:
        return ElementClass.ZERO
    if zero1:
        return ElementClass.P1_ZERO
    if zero2:
        return ElementClass.P2_ZERO
    return ElementClass.FINITE_NONSINGULAR


def reciprocal(z: ExtComplex) -> ExtComplex:
    """``1/z`` on the Riemann sphere: 1/0 is INF and 1/INF is 0."""
    if z is INF:
        return 0j
    if z == 0:
        return INF
    try:
        r = 1 / z
    except OverflowError:
        return INF
    if not (math.isfinite(r.real) and math.isfinite(r.imag)):
        return INF
    return r


def extended_invert(w: Bicomplex | ExtendedBicomplex) -> ExtendedBicomplex:
    """Component-wise reciprocal, total on the extended plane."""
    w = lift(w)
    return ExtendedBicomplex(reciprocal(w.p1), reciprocal(w.p2))
