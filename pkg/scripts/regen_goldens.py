"""Rewrite tests/golden/*.txt from the current CLI.

    python3 scripts/regen_goldens.py [--check]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from golden_cases import CASES, golden_path, render  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="only report differences")
    args = ap.parse_args()
    stale = 0
    for name in CASES:
        text, path = render(name), golden_path(name)
        current = path.read_text(encoding="utf-8") if path.exists() else None
        if current == text:
            print(f"{path.name}: up to date")
            continue
        stale += 1
        if args.check:
            print(f"{path.name}: differs")
        else:
            path.write_text(text, encoding="utf-8")
            print(f"{path.name}: written")
    return 1 if args.check and stale else 0


if __name__ == "__main__":
    sys.exit(main())
