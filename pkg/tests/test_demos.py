"""Smoke-run every demo script and require clean, non-empty output."""

import io
import runpy
from contextlib import redirect_stdout
from pathlib import Path

import pytest

DEMO_DIR = Path(__file__).resolve().parent.parent / "demos"
SCRIPTS = sorted(DEMO_DIR.glob("*.py"))


def test_demo_scripts_present():
    assert len(SCRIPTS) == 5


@pytest.mark.parametrize("script", SCRIPTS, ids=lambda p: p.stem)
def test_demo_runs_clean(script):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        runpy.run_path(str(script), run_name="__main__")
    out = buffer.getvalue()
    assert out.strip()
    assert "FAIL" not in out.splitlines()[0]
