from typing import Dict, List, Optional
from pathlib import Path

import pandas as pd

from ..config import settings
from ..schemas.cover import RunReport, stable_json
from .logging import logger


class ReportExporter:
    """Writes run reports and rewritten fibrations to an output directory."""

    SUPPORTED_FORMATS = {
        'json': 'Run report (byte-stable JSON, timings excluded)',
        'kirby': 'Handle-list text of every emitted complex',
        'csv': 'Move logs, one row per move'
    }

    def __init__(self, output_dir: Optional[str] = None):
        """
        Initialize the exporter.

        Args:
            output_dir (str, optional): Directory to save exported files, settings.EXPORT_PATH by default
        """
        self.output_dir = Path(output_dir or settings.EXPORT_PATH)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def export(self, report: RunReport, format: str, filename: Optional[str] = None) -> List[str]:
        """
        Export a run report in the specified format.

        Args:
            report: The report to export
            format: Export format (json, kirby, csv)
            filename: Optional file stem, the first 16 hex digits of the input digest by default

        Returns:
            list: Paths of the written files
        """
        if format not in self.SUPPORTED_FORMATS:
            raise ValueError(f"Unsupported format: {format}")

        stem = filename or report.digest[:16]
        try:
            if format == 'json':
                return [self._export_json(report, stem)]
            elif format == 'kirby':
                return self._export_kirby(report.handle_complexes, stem)
            elif format == 'csv':
                return [self._export_csv(report, stem)]
        except Exception as e:
            logger.error(f"Export error: {str(e)}")
            raise

    def export_source(self, source: str, filename: str) -> str:
        """Write rewritten fibration text."""
        filepath = self.output_dir / f"{filename}.fib"
        filepath.write_text(source if source.endswith("\n") else source + "\n")
        return str(filepath)

    def _export_json(self, report: RunReport, filename: str) -> str:
        filepath = self.output_dir / f"{filename}.json"
        filepath.write_text(stable_json(report, exclude={"timings"}))
        return str(filepath)

    def _export_kirby(self, complexes: Dict[str, str], filename: str) -> List[str]:
        paths = []
        for name in sorted(complexes):
            filepath = self.output_dir / f"{filename}.{name}.kirby"
            filepath.write_text(complexes[name])
            paths.append(str(filepath))
        return paths

    def _export_csv(self, report: RunReport, filename: str) -> str:
        """Export move logs as CSV."""
        filepath = self.output_dir / f"{filename}.moves.csv"
        self.moves_frame(report).to_csv(filepath, index=False)
        return str(filepath)

    @staticmethod
    def moves_frame(report: RunReport) -> pd.DataFrame:
        """Move logs of every complex, one row per move, numbered from 1 within each log."""
        rows = [
            {"complex": name, "step": step, **entry.dict()}
            for name in sorted(report.move_logs)
            for step, entry in enumerate(report.move_logs[name], start=1)
        ]
        columns = ["complex", "step", "move", "targets", "chi_before", "chi_after",
                   "signature_before", "signature_after"]
        df = pd.DataFrame(rows, columns=columns)
        df["targets"] = df["targets"].map(lambda t: " ".join(t))
        return df

    @staticmethod
    def get_supported_formats() -> Dict[str, str]:
        """Get list of supported export formats with descriptions."""
        return ReportExporter.SUPPORTED_FORMATS
