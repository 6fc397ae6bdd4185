"""Run only the acceptance criteria and print their summary lines."""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]

if __name__ == "__main__":
    sys.exit(pytest.main(["-q", str(ROOT / "tests" / "test_acceptance.py")]))
