"""Orbits of a few transforms from a common start point.

Shows attraction to a fixed point, one component running off to infinity, and the
non-converging orbit of the four-point example (one component is elliptic).

    python3 scripts/orbit_demo.py --steps 200
"""

import argparse
import json
from dataclasses import dataclass

from bimoebius import ONE, ZERO, Bicomplex, classify, format_literal, make_transform, orbit, parse


@dataclass(frozen=True)
class OrbitConfig:
    steps: int = 100
    tol: float = 1e-12
    start: str = "[0.3+0.1i, -0.2]"


CASES = {
    "contraction": make_transform(Bicomplex(0.5, 0.25j), ZERO, ZERO, ONE),
    "half-escape": make_transform(Bicomplex(0.5, 2), Bicomplex(0, 1), ZERO, ONE),
    "four-point": make_transform(
        Bicomplex(4 + 5j, 1 + 2j), -Bicomplex(-1 + 3j, 1 + 8j), ONE, Bicomplex(2 + 2j, -(3 + 2j))
    ),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--steps", type=int, default=OrbitConfig.steps)
    ap.add_argument("--tol", type=float, default=OrbitConfig.tol)
    ap.add_argument("--start", default=OrbitConfig.start)
    cfg = OrbitConfig(**vars(ap.parse_args()))
    w0 = parse(cfg.start)
    for name, S in CASES.items():
        trace = orbit(S, w0, cfg.steps, cfg.tol)
        print(
            json.dumps(
                {
                    "name": name,
                    "converged": trace.converged,
                    "steps": trace.steps,
                    "last": format_literal(trace.last),
                    "class": classify(trace.last).value,
                }
            )
        )


if __name__ == "__main__":
    main()
