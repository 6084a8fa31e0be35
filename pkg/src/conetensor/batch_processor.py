# src/conetensor/batch_processor.py
"""Queue of verification suite jobs, run one suite after another."""

import logging
from dataclasses import dataclass, field
from threading import Event
from typing import Callable, List, Optional

from .exceptions import ConeTensorError, DoubleDescriptionLimitError, RunCancelledError
from .models import SuiteReport
from .suites import SuiteRunner, resolve_suites

logger = logging.getLogger(__name__)


@dataclass
class SuiteJob:
    """A single suite waiting in the queue."""

    suite: str
    status: str = "pending"  # pending, running, completed, failed, cancelled
    error_message: str = ""
    report: Optional[SuiteReport] = None


@dataclass
class BatchResult:
    """Result of running the queue."""

    total_jobs: int
    completed: int
    failed: int
    cancelled: int
    reports: List[SuiteReport] = field(default_factory=list)
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.cancelled == 0 and all(r.passed for r in self.reports)


class BatchProcessor:
    """Manages a queue of suite jobs.

    A job is ``completed`` when its suite ran to the end, whatever the check
    outcomes; it is ``failed`` when the suite itself raised.
    """

    def __init__(self, runner: Optional[SuiteRunner] = None):
        self.queue: List[SuiteJob] = []
        self.runner = runner or SuiteRunner()

    def add_job(self, suite: str) -> int:
        """Add a suite (or ``all``/an alias, expanded) to the queue. Returns the index of the last job."""
        for name in resolve_suites(suite):
            self.queue.append(SuiteJob(suite=name))
        return len(self.queue) - 1

    def process_all(
        self, progress_callback: Optional[Callable[[int, int, str], None]] = None, stop_event: Optional[Event] = None
    ) -> BatchResult:
        """
        Run all pending jobs in queue order.

        Args:
            progress_callback: Callback(current_job, total_jobs, message)
            stop_event: Event to signal cancellation

        Returns:
            BatchResult with the reports of every completed job

        Raises:
            DoubleDescriptionLimitError: as soon as any suite exceeds the row cap.
        """
        self.runner.stop_event = stop_event
        pending_jobs = [job for job in self.queue if job.status == "pending"]
        total = len(pending_jobs)
        completed = failed = cancelled = 0
        reports: List[SuiteReport] = []
        details: List[str] = []

        for i, job in enumerate(pending_jobs):
            if stop_event and stop_event.is_set():
                job.status = "cancelled"
                cancelled += 1
                details.append(f"cancelled: {job.suite}")
                continue

            job.status = "running"
            if progress_callback:
                progress_callback(i + 1, total, f"Running suite {job.suite}")

            try:
                job.report = self.runner.run_suite(job.suite)
                job.status = "completed"
                completed += 1
                reports.append(job.report)
                details.append(
                    f"{job.suite}: {len(job.report.checks) - job.report.failed_count}/{len(job.report.checks)} passed"
                )
                logger.info(f"Batch job completed: {job.suite}")

            except DoubleDescriptionLimitError:
                job.status = "failed"
                raise

            except RunCancelledError:
                job.status = "cancelled"
                cancelled += 1
                details.append(f"cancelled: {job.suite}")

            except ConeTensorError as e:
                job.status = "failed"
                job.error_message = str(e)
                failed += 1
                details.append(f"{job.suite}: {e}")
                logger.warning(f"Batch job failed: {job.suite} - {e}")

        return BatchResult(
            total_jobs=total, completed=completed, failed=failed, cancelled=cancelled, reports=reports, details=details
        )

    def get_summary(self) -> str:
        counts = {status: 0 for status in ("pending", "running", "completed", "failed", "cancelled")}
        for job in self.queue:
            counts[job.status] += 1
        return ", ".join(f"{n} {status}" for status, n in counts.items())
