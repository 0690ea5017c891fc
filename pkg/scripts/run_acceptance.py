#!/usr/bin/env python3
"""Run the acceptance suite and print only the per-criterion summary lines."""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(ROOT / "tests" / "test_acceptance.py")],
        cwd=ROOT,
        capture_output=True,
        text=True,
    )
    for line in proc.stdout.splitlines():
        if line.startswith(("CRITERION", "info")):
            print(line)
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
