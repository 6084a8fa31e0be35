"""
Integration tests for conetensor.

These run the real verification suites over the bundled corpus and the full
command line, so they are marked slow.
"""

import json
import os
import sys
from unittest.mock import patch

import pytest

# Add src to path for imports
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../src")))

from conetensor.cli import main
from conetensor.constants import EXIT_OK, SUITE_NAMES
from conetensor.main import verify_backend
from conetensor.reports import render_json
from conetensor.suites import SuiteRunner

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_suite_passes(suite):
    """Every statement holds on the corpus; failures print their witnesses."""
    report = SuiteRunner(workers=4, seed=20240601).run_suite(suite)
    failed = [str(c) for c in report.checks if not c.passed]
    assert report.checks
    assert not failed, "\n".join(failed)


def test_reports_independent_of_workers():
    one = SuiteRunner(workers=1, seed=11).run("thmC")
    many = SuiteRunner(workers=8, seed=11).run("thmC")
    assert render_json(one) == render_json(many)


def test_oracle_reports_reproducible():
    first = SuiteRunner(workers=4, seed=3).run("oracle")
    second = SuiteRunner(workers=4, seed=3).run("oracle")
    assert render_json(first) == render_json(second)


def test_rank_one_rays_of_square_pair():
    report = SuiteRunner(workers=2, seed=1).run_suite("thmF_rays")
    structure = [c for c in report.checks if c.data.get("rank_one") is not None]
    assert structure
    assert structure[0].data["rank_one"] == 16


def test_verify_backend_batches_all():
    progress = []
    result = verify_backend("all", progress_callback=lambda i, n, msg: progress.append((i, n)), seed=7, workers=4)
    assert [r.suite for r in result.reports] == list(SUITE_NAMES)
    assert result.passed
    assert progress[-1] == (len(SUITE_NAMES), len(SUITE_NAMES))


def test_cli_verify_json(tmp_path):
    target = tmp_path / "report.json"
    with patch("conetensor.cli.configure_logging"), patch("conetensor.config.CONFIG_FILE", tmp_path / "none.json"):
        code = main(["--format", "json", "--output", str(target), "verify", "--suite", "mapping"])
    assert code == EXIT_OK
    data = json.loads(target.read_text())
    assert data["passed"] is True
    assert data["suites"][0]["suite"] == "mapping"
