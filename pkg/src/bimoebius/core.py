"""Bicomplex arithmetic.

A bicomplex number ``w = z1 + z2*i2`` (with ``z1, z2`` in C(i1)) is stored by
its idempotent components ``p1 = z1 - z2*i1`` and ``p2 = z1 + z2*i1`` so that
``w = p1*e1 + p2*e2``.  Every ring operation then runs independently on the two
components, each an ordinary Python ``complex`` (``i1`` is played by ``1j``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from numbers import Number
from typing import Union

DEFAULT_EPS = 1e-12
REL_TOL = 1e-12
ABS_TOL = 1e-15

Scalar = Union[int, float, complex]


class SingularOperand(ZeroDivisionError):
    """Raised when a null-cone element is inverted inside the ring."""


def _clean(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite component: {z!r}")
    # adding +0.0 turns -0.0 into 0.0 and leaves everything else alone
    return complex(z.real + 0.0, z.imag + 0.0)


@dataclass(frozen=True)
class Bicomplex:
    """Element of T held as its idempotent pair ``(p1, p2)``."""

    p1: complex
    p2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "p1", _clean(self.p1))
        object.__setattr__(self, "p2", _clean(self.p2))

    # --- views -----------------------------------------------------------
    @property
    def z1(self) -> complex:
        return _clean((self.p1 + self.p2) / 2)

    @property
    def z2(self) -> complex:
        # i1*(p1 - p2)/2 written out to avoid multiplying by 1j
        diff = self.p1 - self.p2
        return _clean(complex(-diff.imag / 2, diff.real / 2))

    @property
    def cartesian(self) -> tuple[complex, complex]:
        return self.z1, self.z2

    @property
    def coords(self) -> tuple[float, float, float, float]:
        """``(x1, x2, x3, x4)`` with ``w = x1 + x2*i1 + x3*i2 + x4*j``."""
        z1, z2 = self.cartesian
        return z1.real, z1.imag, z2.real, z2.imag

    # --- ring ------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Bicomplex(self.p1 + other.p1, self.p2 + other.p2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Bicomplex(self.p1 - other.p1, self.p2 - other.p2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Bicomplex(self.p1 * other.p1, self.p2 * other.p2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * invert(other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * invert(self)

    def __neg__(self) -> Bicomplex:
        return Bicomplex(-self.p1, -self.p2)

    def __pos__(self) -> Bicomplex:
        return self

    def __pow__(self, n: int) -> Bicomplex:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        return Bicomplex(self.p1**n, self.p2**n)

    def __abs__(self) -> float:
        return euclid_norm(self)

    def __repr__(self) -> str:
        x1, x2, x3, x4 = self.coords
        return f"Bicomplex({x1!r} + {x2!r}*i1 + {x3!r}*i2 + {x4!r}*j)"


def _coerce(value) -> Bicomplex:
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, Number) and not isinstance(value, bool):
        # a plain complex number lives in C(i1), so both components equal it
        z = complex(value)
        return Bicomplex(z, z)
    return NotImplemented


def as_bicomplex(value: Bicomplex | Scalar) -> Bicomplex:
    """Lift an int/float/complex (read as an element of C(i1)) into T."""
    w = _coerce(value)
    if w is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a bicomplex number")
    return w


# --- constructors ----------------------------------------------------------

def from_cartesian(z1: Scalar, z2: Scalar) -> Bicomplex:
    """Build ``z1 + z2*i2`` from two elements of C(i1)."""
    z1, z2 = _clean(z1), _clean(z2)
    return Bicomplex(
        complex(z1.real + z2.imag, z1.imag - z2.real),
        complex(z1.real - z2.imag, z1.imag + z2.real),
    )


def from_four_reals(x1: float, x2: float, x3: float, x4: float) -> Bicomplex:
    """Build ``x1 + x2*i1 + x3*i2 + x4*j``."""
    for x in (x1, x2, x3, x4):
        if not math.isfinite(x):
            raise ValueError(f"non-finite coordinate: {x!r}")
    return Bicomplex(complex(x1 + x4, x2 - x3), complex(x1 - x4, x2 + x3))


def from_idempotent(p1: Scalar, p2: Scalar) -> Bicomplex:
    return Bicomplex(p1, p2)


ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 1)
I1 = Bicomplex(1j, 1j)
I2 = from_cartesian(0, 1)
J = from_cartesian(0, 1j)
E1 = Bicomplex(1, 0)
E2 = Bicomplex(0, 1)


# --- conjugations and moduli ----------------------------------------------

def conj1(w: Bicomplex) -> Bicomplex:
    """``conj(z1) + conj(z2)*i2``."""
    return Bicomplex(w.p2.conjugate(), w.p1.conjugate())


def conj2(w: Bicomplex) -> Bicomplex:
    """``z1 - z2*i2``."""
    return Bicomplex(w.p2, w.p1)


def conj3(w: Bicomplex) -> Bicomplex:
    """``conj(z1) - conj(z2)*i2``."""
    return Bicomplex(w.p1.conjugate(), w.p2.conjugate())


@dataclass(frozen=True)
class SquareModuli:
    """The three square moduli of a bicomplex number.

    ``mod_i1_sq`` is an element of C(i1); ``mod_i2_sq = (x, y)`` stands for
    ``x + y*i2``; ``mod_j_sq = (x, y)`` stands for the duplex number ``x + y*j``.
    """

    mod_i1_sq: complex
    mod_i2_sq: tuple[float, float]
    mod_j_sq: tuple[float, float]


def square_moduli(w: Bicomplex) -> SquareModuli:
    m1 = w * conj2(w)
    m2 = w * conj1(w)
    mj = w * conj3(w)
    x1, _, x3, _ = m2.coords
    y1, _, _, y4 = mj.coords
    return SquareModuli(m1.z1, (x1, x3), (y1, y4))


def euclid_norm(w: Bicomplex) -> float:
    return math.hypot(*w.coords)


def cn(w: Bicomplex) -> complex:
    """Complex square norm ``z1**2 + z2**2``, i.e. ``p1*p2``."""
    return w.p1 * w.p2


def is_singular(w: Bicomplex, eps: float = DEFAULT_EPS) -> bool:
    """Null-cone test, scale-aware; ``eps=0`` is exact membership."""
    if eps < 0:
        raise ValueError("eps must be non-negative")
    small = min(abs(w.p1), abs(w.p2))
    return small <= eps * max(1.0, euclid_norm(w))


def invert(w: Bicomplex, eps: float = 0.0) -> Bicomplex:
    if is_singular(w, eps):
        raise SingularOperand(f"{w!r} lies in the null cone")
    try:
        return Bicomplex(1 / w.p1, 1 / w.p2)
    except (OverflowError, ValueError):
        raise SingularOperand(f"inverse of {w!r} is not representable") from None


def isclose(u: Bicomplex, v: Bicomplex, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> bool:
    return cmath.isclose(u.p1, v.p1, rel_tol=rel_tol, abs_tol=abs_tol) and cmath.isclose(
        u.p2, v.p2, rel_tol=rel_tol, abs_tol=abs_tol
    )


class Subalgebra(str, Enum):
    REAL = "Real"
    C_I1 = "C_i1"
    C_I2 = "C_i2"
    DUPLEX = "Duplex"
    GENERAL = "GeneralT"


def subalgebra_of(w: Bicomplex) -> Subalgebra:
    _, x2, x3, x4 = w.coords
    if x2 == x3 == x4 == 0:
        return Subalgebra.REAL
    if x3 == x4 == 0:
        return Subalgebra.C_I1
    if x2 == x4 == 0:
        return Subalgebra.C_I2
    if x2 == x3 == 0:
        return Subalgebra.DUPLEX
    return Subalgebra.GENERAL
