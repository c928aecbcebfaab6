"""Run the acceptance suite and print one PASS/FAIL line per criterion."""
import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    sys.exit(pytest.main(["-q", "-p", "no:cacheprovider",
                          str(ROOT / "tests" / "test_acceptance.py"), *sys.argv[1:]]))
