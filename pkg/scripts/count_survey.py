"""Histogram of fixed-point counts over random transforms.

Coefficients are drawn with coordinates in [-scale, scale]; a fraction of the
transforms is conjugated from parabolic or affine seeds so that counts 1 and 2
show up next to the generic 4.

    python3 scripts/count_survey.py --trials 5000 --seed 3
"""

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from bimoebius import (
    ONE,
    ZERO,
    Bicomplex,
    compose,
    fixed_points,
    from_four_reals,
    invert_transform,
    is_singular,
    make_transform,
    verify_fixed_point,
)
from bimoebius.mobius import DegenerateDeterminant


@dataclass(frozen=True)
class SurveyConfig:
    trials: int = 2000
    seed: int = 0
    scale: float = 5.0
    floor: float = 1e-3
    special_fraction: float = 0.3
    tol: float = 1e-9


def _element(rng: random.Random, cfg: SurveyConfig) -> Bicomplex:
    return from_four_reals(*(rng.uniform(-cfg.scale, cfg.scale) for _ in range(4)))


def _generic(rng, cfg):
    while True:
        coeffs = [_element(rng, cfg) for _ in range(4)]
        a, b, c, d = coeffs
        if all(min(abs(w.p1), abs(w.p2)) >= cfg.floor for w in (*coeffs, a * d - b * c)):
            return make_transform(*coeffs)


def _special(rng, cfg):
    # parabolic or affine seed in each component, moved by a random conjugation
    seeds = [
        (1, 1, 0, 1),  # translation: one fixed point
        (2 + 1j, 1, 0, 1),  # affine: two fixed points
        (1, 0, 1, 1),  # finite parabolic: one fixed point
    ]
    s1, s2 = rng.choice(seeds), rng.choice(seeds)
    seed = make_transform(*(Bicomplex(x, y) for x, y in zip(s1, s2)))
    T = _generic(rng, cfg)
    return compose(T, compose(seed, invert_transform(T)))


def run(cfg: SurveyConfig) -> dict:
    rng = random.Random(cfg.seed)
    counts: Counter = Counter()
    failures = 0
    t0 = time.perf_counter()
    for _ in range(cfg.trials):
        try:
            S = _special(rng, cfg) if rng.random() < cfg.special_fraction else _generic(rng, cfg)
        except DegenerateDeterminant:
            continue
        if is_singular(S.det, S.eps):
            continue
        fps = fixed_points(S)
        counts[str(fps.count)] += 1
        failures += sum(not verify_fixed_point(S, p, cfg.tol) for p in fps.points)
    return {
        "config": asdict(cfg),
        "counts": dict(sorted(counts.items())),
        "verification_failures": failures,
        "seconds": round(time.perf_counter() - t0, 3),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    for name, default in asdict(SurveyConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = SurveyConfig(**vars(ap.parse_args()))
    print(json.dumps(run(cfg), indent=2))


if __name__ == "__main__":
    main()
