"""The fixed verification suite, one test per criterion.

Every criterion is exact integer arithmetic end to end; a failure message
carries the first offending instance reported by the check.
"""

import re
import shutil
import subprocess
import sys

import pytest

from posetlab import verification


@pytest.mark.parametrize(
    "check",
    verification.CHECKS,
    ids=[f"{i + 1:02d}-{c.__name__.removeprefix('check_')}"
         for i, c in enumerate(verification.CHECKS)],
)
def test_criterion(check):
    result = check()
    status = "PASS" if result.ok else "FAIL"
    print(f"criterion {result.number}: {status} — {result.title}: {result.detail}")
    assert result.ok, f"criterion {result.number} ({result.title}): {result.detail}"


def test_criteria_are_numbered_in_order():
    results = verification.run_all()
    assert [r.number for r in results] == list(range(1, len(verification.CHECKS) + 1))
    assert len(results) == 9


def test_verify_command_end_to_end():
    exe = shutil.which("posetlab")
    argv = [exe] if exe else [sys.executable, "-m", "posetlab.cli"]
    proc = subprocess.run(
        argv + ["verify-paper"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    rows = proc.stdout.splitlines()
    assert len(rows) == 9
    for i, row in enumerate(rows, start=1):
        m = re.match(r"^\s*(\d+)  (PASS|FAIL)  (.+): (.+)$", row)
        assert m, f"malformed row: {row!r}"
        assert int(m.group(1)) == i
        assert m.group(2) == "PASS", row
