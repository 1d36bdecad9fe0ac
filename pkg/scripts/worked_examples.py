"""Fixed points of the three worked transforms, printed as JSON lines.

    python3 scripts/worked_examples.py
"""

import json

from bimoebius import ONE, ZERO, Bicomplex, fixed_points, format_literal, make_transform, verify_fixed_point

TRANSFORMS = {
    "translation": make_transform(ONE, Bicomplex(1 + 2j, 1 + 3j), ZERO, ONE),
    "affine": make_transform(Bicomplex(2 + 3j, 1 + 4j), Bicomplex(1 + 2j, 1 + 3j), ZERO, ONE),
    "four-point": make_transform(
        Bicomplex(4 + 5j, 1 + 2j),
        -Bicomplex(-1 + 3j, 1 + 8j),
        ONE,
        Bicomplex(2 + 2j, -(3 + 2j)),
    ),
}


def main() -> None:
    for name, S in TRANSFORMS.items():
        fps = fixed_points(S)
        print(
            json.dumps(
                {
                    "name": name,
                    "count": fps.count,
                    "points": [format_literal(p) for p in fps.points],
                    "verified": all(verify_fixed_point(S, p) for p in fps.points),
                }
            )
        )


if __name__ == "__main__":
    main()
