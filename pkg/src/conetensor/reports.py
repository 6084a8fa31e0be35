from pathlib import Path
from typing import List, Sequence

import openpyxl
from openpyxl.styles import Border, Font, PatternFill, Side

from .constants import CHECKS_SHEET, COLUMN_WIDTHS, EXCEL_HEADERS, SUMMARY_SHEET, ReportMessages
from .documents import dumps
from .models import SuiteReport


def render_text(reports: Sequence[SuiteReport], verbose: bool = False) -> str:
    """Human-readable report; passing checks are listed only with ``verbose``."""
    lines: List[str] = []
    for report in reports:
        passed = len(report.checks) - report.failed_count
        mark = ReportMessages.PASS if report.passed else ReportMessages.FAIL
        lines.append(f"== {report.suite}: {mark} ({passed}/{len(report.checks)} checks passed)")
        for check in report.checks:
            if verbose or not check.passed:
                lines.append(f"  {check}")
    all_passed = all(r.passed for r in reports)
    lines.append(ReportMessages.ALL_PASSED if all_passed else ReportMessages.SOME_FAILED)
    return "\n".join(lines) + "\n"


def render_json(reports: Sequence[SuiteReport]) -> str:
    """Deterministic JSON: no timings, checks in task order."""
    return dumps(
        {
            "passed": all(r.passed for r in reports),
            "suites": [r.to_dict() for r in reports],
        }
    )


class ExcelReportGenerator:
    def __init__(self, title=CHECKS_SHEET):
        self.wb = openpyxl.Workbook()
        self.ws = self.wb.active
        self.ws.title = title
        self.summary = self.wb.create_sheet(SUMMARY_SHEET)
        self.thin_border = Border(
            left=Side(style="thin"), right=Side(style="thin"), top=Side(style="thin"), bottom=Side(style="thin")
        )
        self.fail_fill = PatternFill(start_color="FFC7CE", end_color="FFC7CE", fill_type="solid")
        self.next_row = 2
        self._setup_headers()

    def _setup_headers(self):
        for cell_coord, text in EXCEL_HEADERS.items():
            cell = self.ws[cell_coord]
            cell.value = text
            cell.font = Font(bold=True)
            cell.border = self.thin_border

        for col, width in COLUMN_WIDTHS.items():
            self.ws.column_dimensions[col].width = width

        for col_idx, text in enumerate(("Suite", "Passed", "Failed", "Total", "Result"), start=1):
            cell = self.summary.cell(row=1, column=col_idx, value=text)
            cell.font = Font(bold=True)
            cell.border = self.thin_border
        self.summary.column_dimensions["A"].width = COLUMN_WIDTHS["B"]

    def add_report(self, report: SuiteReport):
        for check in report.checks:
            numero = self.next_row - 1
            values = [
                numero,
                report.suite,
                check.name,
                ReportMessages.PASS if check.passed else ReportMessages.FAIL,
                check.detail,
                ", ".join(check.witness) if check.witness is not None else "",
            ]
            for col_idx, val in enumerate(values, start=1):
                c = self.ws.cell(row=self.next_row, column=col_idx, value=val)
                c.border = self.thin_border
                if not check.passed:
                    c.fill = self.fail_fill
            self.next_row += 1

        passed = len(report.checks) - report.failed_count
        self.summary.append(
            [
                report.suite,
                passed,
                report.failed_count,
                len(report.checks),
                ReportMessages.PASS if report.passed else ReportMessages.FAIL,
            ]
        )

    def save(self, path):
        self.wb.save(str(path))


def write_excel(reports: Sequence[SuiteReport], path: Path) -> Path:
    generator = ExcelReportGenerator()
    for report in reports:
        generator.add_report(report)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    generator.save(path)
    return path
