import cmath
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bimoebius import (
    E1,
    INF,
    ONE,
    STRONG_INFINITY,
    ZERO,
    Bicomplex,
    ExtendedBicomplex,
    compose,
    fixed_points,
    identity,
    invert_transform,
    make_transform,
    solve_component,
    verify_fixed_point,
)
from bimoebius.fixedpoints import quadratic_roots
from bimoebius.mobius import ComponentMobius
from worked_transforms import (
    EXAMPLE1,
    EXAMPLE2,
    EXAMPLE2_A,
    EXAMPLE2_B,
    EXAMPLE2_WRONG,
    EXAMPLE3,
    EXAMPLE3_ROOTS_1,
    EXAMPLE3_ROOTS_2,
)
from strategies import random_transform

grid = st.builds(complex, st.integers(-6, 6), st.integers(-6, 6))


def frac_div(x, y):
    """Exact Gaussian-rational quotient of two complex numbers with integer parts."""
    xr, xi = Fraction(x.real), Fraction(x.imag)
    yr, yi = Fraction(y.real), Fraction(y.imag)
    den = yr * yr + yi * yi
    return ((xr * yr + xi * yi) / den, (xi * yr - xr * yi) / den)


class TestQuadratic:
    def test_worked_component_equations(self):
        roots, mult = quadratic_roots(1, -(2 + 3j), -1 + 3j)
        assert sorted(roots, key=lambda z: (z.real, z.imag)) == [1 + 1j, 1 + 2j]
        assert mult == (1, 1)
        roots, _ = quadratic_roots(1, -(4 + 4j), 1 + 8j)
        assert sorted(roots, key=lambda z: (z.real, z.imag)) == [2 + 1j, 2 + 3j]

    def test_no_cancellation(self):
        roots, _ = quadratic_roots(1, -1e8, 1)
        small = min(roots, key=abs)
        # exact small root is 1e-8 + 1e-24 + ...
        assert abs(small - 1e-8) <= 1e-15 * 1e-8
        # textbook formula loses it completely
        naive = (1e8 - cmath.sqrt(1e16 - 4)) / 2
        assert abs(naive - 1e-8) > 1e-9

    def test_double_root(self):
        r = 1 + 1j
        roots, mult = quadratic_roots(1, -2 * r, r * r)
        assert roots == (r,) and mult == (2,)

    def test_zero_leading_coefficient(self):
        with pytest.raises(ValueError):
            quadratic_roots(0, 1, 1)

    @given(grid, grid, grid.filter(lambda z: z != 0), grid)
    def test_known_roots_and_vieta(self, r1, r2, c, a):
        d = a - c * (r1 + r2)
        b = -c * r1 * r2
        if a * d - b * c == 0:
            return
        sol = solve_component(ComponentMobius(a, b, c, d))
        if r1 == r2:
            assert sol.multiplicities == (2,)
            assert abs(sol.points[0] - r1) <= 1e-10 * max(1.0, abs(r1))
            return
        got = sol.points
        want = min([(r1, r2), (r2, r1)], key=lambda ws: sum(abs(g - w) for g, w in zip(got, ws)))
        for g, w in zip(got, want):
            assert abs(g - w) <= 1e-10 * max(1.0, abs(w))
        s, p = got[0] + got[1], got[0] * got[1]
        assert abs(s - (-(d - a) / c)) <= 1e-9 * max(1.0, abs(s))
        assert abs(p - (-b / c)) <= 1e-9 * max(1.0, abs(p))


class TestSolveComponent:
    def test_case3_equations(self):
        # w^2 - (2+3i)w + (-1+3i) = 0 is c=1, d-a = -(2+3i), b = 1-3i
        sol = solve_component(ComponentMobius(2 + 3j, 1 - 3j, 1, 0))
        assert sol.points == (1 + 1j, 1 + 2j)
        sol = solve_component(ComponentMobius(4 + 4j, -(1 + 8j), 1, 0))
        assert sol.points == (2 + 1j, 2 + 3j)

    def test_translation(self):
        sol = solve_component(ComponentMobius(1, 2 - 1j, 0, 1))
        assert sol.points == (INF,) and sol.multiplicities == (2,)

    def test_affine(self):
        sol = solve_component(ComponentMobius(3, 4, 0, 1))
        assert sol.points == (-2, INF)

    def test_identity(self):
        sol = solve_component(ComponentMobius(2, 0, 0, 2))
        assert sol.all_points and len(sol) == 0

    def test_parabolic_finite(self):
        # w / (w + 1): only 0, doubled
        sol = solve_component(ComponentMobius(1, 0, 1, 1))
        assert sol.points == (0,) and sol.multiplicities == (2,)


class TestWorkedExamples:
    def test_example3(self):
        fps = fixed_points(EXAMPLE3)
        assert fps.count == 4 and not fps.is_identity
        want = [Bicomplex(p, q) for p in EXAMPLE3_ROOTS_1 for q in EXAMPLE3_ROOTS_2]
        for got, w in zip(fps.points, want):
            assert abs(got.p1 - w.p1) <= 1e-9 and abs(got.p2 - w.p2) <= 1e-9
        assert all(verify_fixed_point(EXAMPLE3, p, 1e-9) for p in fps.points)

    def test_example1(self):
        fps = fixed_points(EXAMPLE1)
        assert fps.count == 1
        assert fps.points == (STRONG_INFINITY,)
        assert fps.weak_infinity_points == ()

    def test_example2_oracle(self):
        # fixed points of a*w + b in each component: w_i = b_i / (1 - a_i)
        exact = [
            frac_div(b, 1 - a)
            for a, b in ((EXAMPLE2_A.p1, EXAMPLE2_B.p1), (EXAMPLE2_A.p2, EXAMPLE2_B.p2))
        ]
        assert exact == [
            (Fraction(-7, 10), Fraction(1, 10)),
            (Fraction(-3, 4), Fraction(1, 4)),
        ]

    def test_example2_corrected(self):
        w_star = Bicomplex(-0.7 + 0.1j, -0.75 + 0.25j)
        fps = fixed_points(EXAMPLE2)
        assert fps.count == 2
        finite, strong = fps.points
        assert strong == STRONG_INFINITY
        assert abs(finite.p1 - w_star.p1) <= 1e-12 and abs(finite.p2 - w_star.p2) <= 1e-12
        assert verify_fixed_point(EXAMPLE2, w_star, 1e-9)
        assert verify_fixed_point(EXAMPLE2, STRONG_INFINITY, 1e-9)

    def test_example2_wrong_candidate_is_not_fixed(self):
        assert not verify_fixed_point(EXAMPLE2, EXAMPLE2_WRONG, 1e-9)

    def test_example2_weak_infinities(self):
        fps = fixed_points(EXAMPLE2)
        assert len(fps.weak_infinity_points) == 2
        for w in fps.weak_infinity_points:
            assert (w.p1 is INF) != (w.p2 is INF)
            assert verify_fixed_point(EXAMPLE2, w)


class TestVerify:
    def test_identity(self):
        for w in (ONE, E1, STRONG_INFINITY, ExtendedBicomplex(INF, 3j)):
            assert verify_fixed_point(identity(), w)

    def test_example3(self):
        assert verify_fixed_point(EXAMPLE3, Bicomplex(1 + 1j, 2 + 1j))
        assert not verify_fixed_point(EXAMPLE3, ZERO)
        assert not verify_fixed_point(EXAMPLE3, STRONG_INFINITY)


class TestStructure:
    def test_identity(self):
        fps = fixed_points(identity())
        assert fps.is_identity and fps.count == "infinite" and fps.points == ()
        assert ONE in fps and STRONG_INFINITY in fps

    def test_mixed_identity_component(self):
        S = make_transform(ONE, ZERO, E1, ONE)
        fps = fixed_points(S)
        assert not fps.is_identity and fps.count == "infinite"
        assert fps.sol1.points == (0,) and fps.sol2.all_points
        assert Bicomplex(0, 5 + 1j) in fps
        assert Bicomplex(1, 5) not in fps

    def test_json(self):
        out = fixed_points(EXAMPLE3).to_json()
        assert json.loads(json.dumps(out)) == out
        assert out["count"] == 4
        assert out["points"] == ["[1+1i, 2+1i]", "[1+1i, 2+3i]", "[1+2i, 2+1i]", "[1+2i, 2+3i]"]
        assert out["component_solutions"][0] == {
            "kind": "points",
            "points": ["1+1i", "1+2i"],
            "multiplicities": [1, 1],
        }
        ident = fixed_points(identity()).to_json()
        assert ident["count"] == "infinite" and ident["is_identity"] is True
        assert ident["component_solutions"] == [{"kind": "all"}, {"kind": "all"}]


class TestProperties:
    def test_soundness_and_factorization(self):
        rng = random.Random(29)
        for _ in range(1000):
            S = random_transform(rng)
            fps = fixed_points(S)
            m1, m2 = S.components
            for p in fps.points + fps.weak_infinity_points:
                assert verify_fixed_point(S, p, 1e-9)
                assert p.p1 in fps.sol1.points and p.p2 in fps.sol2.points
                for m, z in ((m1, p.p1), (m2, p.p2)):
                    image = m(z)
                    assert (image is INF and z is INF) or abs(image - z) <= 1e-9 * max(1, abs(z))

    def test_enumerated_is_the_full_product(self):
        rng = random.Random(47)
        for _ in range(300):
            fps = fixed_points(random_transform(rng))
            assert len(fps.enumerated) == len(fps.sol1) * len(fps.sol2)
            assert fps.count == len(fps.enumerated) - len(fps.weak_infinity_points)
        assert len(fixed_points(EXAMPLE2).enumerated) == 4

    def test_count_theorem(self):
        rng = random.Random(31)
        for _ in range(1000):
            S = random_transform(rng, all_coefficients=True)
            assert fixed_points(S).count in (1, 2, 4)

    def test_count_with_parabolic_components(self):
        # (w+1) per component conjugated into a finite parabolic point
        T = make_transform(Bicomplex(1, 2j), ONE, ONE, Bicomplex(3, 1 + 1j))
        P = make_transform(ONE, ONE, ZERO, ONE)
        S = compose(T, compose(P, invert_transform(T)))
        assert fixed_points(S).count == 1
        mixed = make_transform(ONE, Bicomplex(1, 0), ZERO, Bicomplex(1, 2))
        S2 = compose(T, compose(mixed, invert_transform(T)))
        assert fixed_points(S2).count == 2

    def test_conjugation_preserves_count(self):
        rng = random.Random(37)
        for _ in range(300):
            S, T = random_transform(rng, all_coefficients=True), random_transform(rng, all_coefficients=True)
            conj = compose(T, compose(S, invert_transform(T)))
            assert fixed_points(conj).count == fixed_points(S).count
