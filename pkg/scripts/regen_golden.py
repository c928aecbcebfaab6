"""Rewrite tests/golden from the current CLI output.

Run after an intentional change to a fixture report, then review the diff.
"""
import argparse
import pathlib

from ordtopo.cli import golden_outputs

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args()
    GOLDEN.mkdir(exist_ok=True)
    stale = []
    for name, text in golden_outputs().items():
        path = GOLDEN / name
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(name)
        else:
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path.relative_to(GOLDEN.parent.parent)}")
    if stale:
        raise SystemExit("stale golden files: " + ", ".join(stale))


if __name__ == "__main__":
    main()
