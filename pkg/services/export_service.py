import csv
import json
from datetime import datetime
from typing import List, Union

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from models import VerificationRun

Runs = Union[VerificationRun, List[VerificationRun]]


def _as_list(runs: Runs) -> List[VerificationRun]:
    return [runs] if isinstance(runs, VerificationRun) else list(runs)


class ExportService:
    """Service for exporting verification runs."""

    def export_to_excel(self, runs: Runs, filepath: str, include_detail: bool = True) -> str:
        """
        Export verification checks to an Excel workbook.

        Args:
            runs: One run or several suites' runs
            filepath: Output file path
            include_detail: Whether to add the per-check detail column

        Returns:
            Path to the created file
        """
        runs = _as_list(runs)
        wb = Workbook()
        ws = wb.active
        ws.title = "Checks"

        header_fill = PatternFill(start_color="4472C4", end_color="4472C4", fill_type="solid")
        header_font_white = Font(bold=True, size=12, color="FFFFFF")
        thin_border = Border(
            left=Side(style='thin'),
            right=Side(style='thin'),
            top=Side(style='thin'),
            bottom=Side(style='thin')
        )
        center_align = Alignment(horizontal='center', vertical='center')
        wrap_align = Alignment(wrap_text=True, vertical='top')

        headers = ["#", "Suite", "Check", "Result", "Seconds"]
        if include_detail:
            headers.append("Detail")

        for col, header in enumerate(headers, 1):
            cell = ws.cell(row=1, column=col, value=header)
            cell.font = header_font_white
            cell.fill = header_fill
            cell.border = thin_border
            cell.alignment = center_align

        row_num = 2
        for run in runs:
            for check in run.checks:
                values = [row_num - 1, run.suite, check.name, "PASS" if check.passed else "FAIL",
                          round(check.elapsed, 4)]
                if include_detail:
                    values.append(check.detail)
                for col, value in enumerate(values, 1):
                    cell = ws.cell(row=row_num, column=col, value=value)
                    cell.border = thin_border
                    cell.alignment = wrap_align if headers[col - 1] == "Detail" else center_align

                result = ws.cell(row=row_num, column=4)
                result.font = Font(bold=True)
                color = "C6EFCE" if check.passed else "FFC7CE"
                result.fill = PatternFill(start_color=color, end_color=color, fill_type="solid")
                row_num += 1

        widths = {"#": 6, "Suite": 22, "Check": 40, "Result": 10, "Seconds": 10, "Detail": 60}
        for col, header in enumerate(headers, 1):
            ws.column_dimensions[get_column_letter(col)].width = widths[header]

        self._add_summary_sheet(wb, runs)
        wb.save(filepath)
        return filepath

    def _add_summary_sheet(self, wb: Workbook, runs: List[VerificationRun]):
        """Add per-suite pass/fail counts."""
        ws = wb.create_sheet("Summary")
        header_font = Font(bold=True, size=12)
        thin_border = Border(
            left=Side(style='thin'),
            right=Side(style='thin'),
            top=Side(style='thin'),
            bottom=Side(style='thin')
        )

        if not runs:
            ws.cell(row=1, column=1, value="No runs available")
            return

        summary_data = [("Verification Summary", "", ""), ("", "", ""), ("Suite", "Passed", "Failed")]
        for run in runs:
            summary_data.append((run.suite, run.pass_count, run.fail_count))
        summary_data.extend([
            ("", "", ""),
            ("Total", sum(r.pass_count for r in runs), sum(r.fail_count for r in runs)),
            ("Export Date", datetime.now().strftime("%Y-%m-%d %H:%M"), ""),
        ])

        for row_num, row in enumerate(summary_data, 1):
            for col, value in enumerate(row, 1):
                cell = ws.cell(row=row_num, column=col, value=value)
                cell.border = thin_border
                if row[0] in ("Verification Summary", "Suite", "Total"):
                    cell.font = header_font

        ws.column_dimensions['A'].width = 24
        ws.column_dimensions['B'].width = 18
        ws.column_dimensions['C'].width = 12

    def export_to_csv(self, runs: Runs, filepath: str) -> str:
        """Export verification checks to a CSV file."""
        with open(filepath, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f)
            writer.writerow(["Suite", "Check", "Passed", "Seconds", "Detail"])
            for run in _as_list(runs):
                for check in run.checks:
                    writer.writerow([run.suite, check.name, check.passed, round(check.elapsed, 4), check.detail])
        return filepath

    def export_to_json(self, runs: Runs, filepath: str) -> str:
        """Export verification runs to a JSON file."""
        runs = _as_list(runs)
        data = {
            'exported_at': datetime.now().isoformat(),
            'runs': [r.to_dict() for r in runs],
            'summary': {
                'suites': len(runs),
                'passed': all(r.passed for r in runs),
                'failed_checks': sum(r.fail_count for r in runs)
            }
        }
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False)
        return filepath
