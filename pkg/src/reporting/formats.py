#!/usr/bin/env python3
"""
Report formatting module for SIMPREF
Renders command reports as JSON, CSV or text
"""

import json
from typing import Any, Dict, List, Optional

import pandas as pd

FORMATS = ['json', 'csv', 'text']


class ReportFormatter:
    """Handles report formatting for the supported output formats"""

    def __init__(self, output_format: str = 'json'):
        if output_format not in FORMATS:
            raise ValueError(f"Unsupported format: {output_format}")
        self.output_format = output_format

    def render(self, report: Dict[str, Any], rows: Optional[List[Dict[str, Any]]] = None) -> str:
        """
        Render a report in the configured format.

        Args:
            report: Report dictionary (command, estimate, enclosure, panels, properties, exit)
            rows: Per-panel, per-candidate or per-property rows for CSV output

        Returns:
            Rendered text without a trailing newline
        """
        if self.output_format == 'json':
            return self.format_json(report)
        if self.output_format == 'csv':
            return self.format_csv(report, rows)
        return self.format_text(report)

    def format_json(self, report: Dict[str, Any]) -> str:
        """JSON with insertion order kept, so identical reports give identical bytes"""
        return json.dumps(report, indent=2, allow_nan=False)

    def format_csv(self, report: Dict[str, Any], rows: Optional[List[Dict[str, Any]]] = None) -> str:
        """One row per panel or property; a single flattened summary row otherwise"""
        if rows is None and 'properties' in report:
            rows = report['properties']
        if not rows:
            rows = [self._flatten(report)]
        df = pd.DataFrame(rows)
        return df.to_csv(index=False, float_format='%.17g').rstrip('\n')

    def format_text(self, report: Dict[str, Any]) -> str:
        """Human-readable summary"""
        lines = [f"📊 SIMPREF {report.get('command', '')}", "=" * 50]

        if 'error' in report:
            lines.append(f"❌ Error: {report['error']}")
        if 'estimate' in report:
            lines.append(f"{'Estimate':20} {report['estimate']!r}")
        enclosure = report.get('enclosure')
        if enclosure:
            lines.append(f"{'Enclosure':20} [{enclosure['lower']!r}, {enclosure['upper']!r}]")
            lines.append(f"{'Theorem':20} {enclosure['theorem']}")
            lines.append(f"{'Confidence':20} {enclosure['confidence']}")
        if 'panels' in report:
            lines.append(f"{'Panels':20} {report['panels']}")

        for candidate in report.get('candidates', []):
            lines.append(f"  {candidate['theorem']:8} [{candidate['lower']!r}, {candidate['upper']!r}]")

        for key in ('ratio', 'best_ratio', 'candidate_description'):
            if key in report:
                lines.append(f"{key:20} {report[key]}")

        properties = report.get('properties', [])
        if properties:
            passed = sum(1 for p in properties if p['pass'])
            for p in properties:
                mark = "✅" if p['pass'] else "❌"
                lines.append(f"{mark} {p['name']:40} slack {p['slack']:.3e}")
            lines.append("-" * 50)
            lines.append(f"{passed}/{len(properties)} properties passed")

        lines.append(f"{'Exit':20} {report.get('exit', 0)}")
        return "\n".join(lines)

    @staticmethod
    def _flatten(report: Dict[str, Any]) -> Dict[str, Any]:
        flat = {}
        for key, value in report.items():
            if isinstance(value, dict):
                for inner, item in value.items():
                    flat[f"{key}_{inner}"] = item
            elif not isinstance(value, list):
                flat[key] = value
        return flat
