"""CLI transcripts for the three worked examples, rendered in-process."""

import contextlib
import io
import shlex
from pathlib import Path

from bimoebius import cli
from worked_transforms import EXAMPLE1_JSON, EXAMPLE2_JSON, EXAMPLE3_JSON

GOLDEN_DIR = Path(__file__).parent / "golden"

CASES = {
    "example1": [
        ["fixed-points", "-t", EXAMPLE1_JSON],
        ["eval", "-t", EXAMPLE1_JSON, "--point", "[inf, inf]"],
        ["eval", "-t", EXAMPLE1_JSON, "--point", "[0, 0]"],
        ["invert", "-t", EXAMPLE1_JSON],
        ["decompose", "-t", EXAMPLE1_JSON],
    ],
    "example2": [
        ["fixed-points", "-t", EXAMPLE2_JSON],
        ["eval", "-t", EXAMPLE2_JSON, "--point", "[-0.7+0.1i, -0.75+0.25i]"],
        ["eval", "-t", EXAMPLE2_JSON, "--point", "[0.5-0.5i, 0.75-0.25i]"],
        ["eval", "-t", EXAMPLE2_JSON, "--point", "[inf, 1]"],
        ["decompose", "-t", EXAMPLE2_JSON],
    ],
    "example3": [
        ["fixed-points", "-t", EXAMPLE3_JSON],
        ["eval", "-t", EXAMPLE3_JSON, "--point", "[1+1i, 2+1i]"],
        ["eval", "-t", EXAMPLE3_JSON, "--point", "[1+2i, 2+3i]", "--style", "cartesian"],
        ["invert", "-t", EXAMPLE3_JSON],
        ["decompose", "-t", EXAMPLE3_JSON],
        ["orbit", "-t", EXAMPLE3_JSON, "--start", "[0, 0]", "-n", "5"],
    ],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def render(name: str) -> str:
    chunks = []
    for argv in CASES[name]:
        code, out, _ = run(argv)
        chunks.append(f"$ bimoebius {shlex.join(argv)}\n{out}[exit {code}]\n")
    return "".join(chunks)


def golden_path(name: str) -> Path:
    return GOLDEN_DIR / f"{name}.txt"
