"""Fixed points of bicomplex Moebius transformations.

Writing ``w = w1*e1 + w2*e2`` splits ``S(w) = w`` into two independent complex
problems, one per idempotent component.  Each component map is identity,
parabolic/affine (fixing INF) or has the two roots of
``c*w**2 + (d - a)*w - b = 0``.

The product of the component solutions is the full fixed set in the extended
plane.  Points with exactly one infinite component (weak infinities) are kept
apart from the counted fixed points, which live in T or are the strong
infinity: an affine map ``(a*w + b)/d`` then has the strong infinity and one
finite point, not four.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field
from typing import Union

from .extended import INF, ExtComplex, ExtendedBicomplex, lift
from .literal import format as format_literal
from .literal import format_component
from .mobius import ComponentMobius, MobiusTransform, evaluate

DISCRIMINANT_TOL = 1e-12
DEDUP_TOL = 1e-9


@dataclass(frozen=True)
class ComponentSolution:
    """Fixed points of one component map.

    ``all_points`` marks the identity map; otherwise ``points`` holds one or two
    distinct points with matching ``multiplicities``.
    """

    points: tuple[ExtComplex, ...] = ()
    multiplicities: tuple[int, ...] = ()
    all_points: bool = False

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        if self.all_points:
            return {"kind": "all"}
        return {
            "kind": "points",
            "points": [format_component(z) for z in self.points],
            "multiplicities": list(self.multiplicities),
        }


ALL_POINTS = ComponentSolution(all_points=True)


def quadratic_roots(A: complex, B: complex, C: complex) -> tuple[tuple[complex, ...], tuple[int, ...]]:
    """Distinct roots of ``A*z**2 + B*z + C`` (``A != 0``) and their multiplicities.

    Uses ``q = -(B + s*sqrt(B**2 - 4AC))/2`` with the sign ``s`` picked so no
    cancellation happens, then roots ``q/A`` and ``C/q``.
    """
    if A == 0:
        raise ValueError("leading coefficient must be nonzero")
    disc = B * B - 4 * A * C
    if abs(disc) <= DISCRIMINANT_TOL * max(abs(B) ** 2, abs(4 * A * C)):
        return (-B / (2 * A),), (2,)
    root = cmath.sqrt(disc)
    plus, minus = B + root, B - root
    q = -(plus if abs(plus) >= abs(minus) else minus) / 2
    r1, r2 = q / A, C / q
    if abs(r1 - r2) <= DEDUP_TOL * max(abs(r1), abs(r2)):
        return (-B / (2 * A),), (2,)
    return (r1, r2), (1, 1)


def _close(x: complex, y: complex, tol: float) -> bool:
    return abs(x - y) <= tol * max(abs(x), abs(y))


def solve_component(m: ComponentMobius) -> ComponentSolution:
    a, b, c, d = m.a, m.b, m.c, m.d
    if m.is_affine:
        scale = max(abs(a), abs(d))
        if _close(a, d, m.eps):
            if abs(b) <= m.eps * scale:
                return ALL_POINTS
            # pure translation: INF is a double fixed point
            return ComponentSolution((INF,), (2,))
        return ComponentSolution((b / (d - a), INF), (1, 1))
    roots, mult = quadratic_roots(c, d - a, -b)
    pairs = sorted(zip(roots, mult), key=lambda pm: _key(pm[0]))
    return ComponentSolution(tuple(p for p, _ in pairs), tuple(m for _, m in pairs))


def _key(z: ExtComplex):
    return (1, 0.0, 0.0) if z is INF else (0, z.real, z.imag)


def _point_key(w: ExtendedBicomplex):
    return _key(w.p1) + _key(w.p2)


@dataclass(frozen=True)
class FixedPointSet:
    sol1: ComponentSolution
    sol2: ComponentSolution
    points: tuple[ExtendedBicomplex, ...] = field(default=())
    is_identity: bool = False
    weak_infinity_points: tuple[ExtendedBicomplex, ...] = field(default=())

    @property
    def enumerable(self) -> bool:
        return not (self.sol1.all_points or self.sol2.all_points)

    @property
    def count(self) -> Union[int, str]:
        """Number of distinct fixed points, or ``"infinite"``."""
        return len(self.points) if self.enumerable else "infinite"

    @property
    def enumerated(self) -> tuple[ExtendedBicomplex, ...]:
        """Full product sol1 x sol2, weak infinities included."""
        return tuple(sorted(self.points + self.weak_infinity_points, key=_point_key))

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "points": [format_literal(p) for p in self.points],
            "is_identity": self.is_identity,
            "weak_infinity_points": [format_literal(p) for p in self.weak_infinity_points],
            "component_solutions": [self.sol1.to_json(), self.sol2.to_json()],
        }

    def __contains__(self, w) -> bool:
        w = lift(w)
        for sol, z in ((self.sol1, w.p1), (self.sol2, w.p2)):
            if sol.all_points:
                continue
            if not any(_same(z, p, 1e-9) for p in sol.points):
                return False
        return True


def fixed_points(S: MobiusTransform) -> FixedPointSet:
    m1, m2 = S.components
    sol1, sol2 = solve_component(m1), solve_component(m2)
    if sol1.all_points or sol2.all_points:
        return FixedPointSet(sol1, sol2, (), sol1.all_points and sol2.all_points)
    points, weak = [], []
    for p, q in itertools.product(sol1.points, sol2.points):
        w = ExtendedBicomplex(p, q)
        (weak if (p is INF) != (q is INF) else points).append(w)
    return FixedPointSet(
        sol1,
        sol2,
        tuple(sorted(points, key=_point_key)),
        False,
        tuple(sorted(weak, key=_point_key)),
    )


def _same(x: ExtComplex, y: ExtComplex, tol: float) -> bool:
    if x is INF or y is INF:
        return x is y
    return abs(x - y) <= tol * max(1.0, abs(y))


def verify_fixed_point(S: MobiusTransform, w, tol: float = 1e-9) -> bool:
    """Check ``S(w) == w``: INF tags exactly, finite parts to mixed tolerance."""
    w = lift(w)
    image = evaluate(S, w)
    return _same(image.p1, w.p1, tol) and _same(image.p2, w.p2, tol)
