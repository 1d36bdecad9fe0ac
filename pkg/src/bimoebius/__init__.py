"""Bicomplex numbers, the extended bicomplex plane and bicomplex Moebius maps."""

from .core import (
    DEFAULT_EPS,
    E1,
    E2,
    I1,
    I2,
    J,
    ONE,
    ZERO,
    Bicomplex,
    SingularOperand,
    SquareModuli,
    Subalgebra,
    cn,
    conj1,
    conj2,
    conj3,
    euclid_norm,
    from_cartesian,
    from_four_reals,
    from_idempotent,
    invert,
    is_singular,
    isclose,
    square_moduli,
    subalgebra_of,
)
from .extended import (
    INF,
    STRONG_INFINITY,
    ElementClass,
    ExtendedBicomplex,
    classify,
    extended_invert,
)
from .fixedpoints import (
    ComponentSolution,
    FixedPointSet,
    fixed_points,
    solve_component,
    verify_fixed_point,
)
from .literal import CartesianInfinity, ParseError, parse
from .literal import format as format_literal
from .mobius import (
    CNotInvertible,
    ComponentMobius,
    DegenerateDeterminant,
    MobiusTransform,
    OrbitTrace,
    compose,
    decompose_affine,
    decompose_generators,
    dilation,
    evaluate,
    identity,
    invert_transform,
    inversion,
    make_transform,
    orbit,
    projectively_equal,
    translation,
)

__version__ = "0.1.0"
