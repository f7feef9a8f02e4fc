"""
Unit tests for report formatting
"""
import io
import json

import pandas as pd
import pytest

from src.reporting import ReportFormatter

INTEGRATE_REPORT = {
    'command': 'integrate',
    'estimate': 1.718281828459045,
    'enclosure': {'lower': 1.7182, 'upper': 1.7183, 'theorem': 'THM1', 'confidence': 'sampled-range'},
    'panels': 2,
    'exit': 0,
}

VERIFY_REPORT = {
    'command': 'verify',
    'properties': [
        {'name': 'representation-1', 'pass': True, 'slack': 1e-12},
        {'name': 'bound-THM1', 'pass': False, 'slack': -2.5e-3},
    ],
    'exit': 1,
}


class TestReportFormatter:
    """Test the three output formats"""

    def test_json_keeps_key_order(self):
        text = ReportFormatter('json').render(INTEGRATE_REPORT)
        assert list(json.loads(text)) == list(INTEGRATE_REPORT)
        assert text == ReportFormatter('json').render(dict(INTEGRATE_REPORT))

    def test_json_rejects_nan(self):
        with pytest.raises(ValueError):
            ReportFormatter('json').render({'command': 'integrate', 'estimate': float('nan')})

    def test_csv_rows(self):
        rows = [{'a': 0.0, 'b': 0.5, 'theorem': 'THM1'}, {'a': 0.5, 'b': 1.0, 'theorem': 'EQ7'}]
        df = pd.read_csv(io.StringIO(ReportFormatter('csv').render(INTEGRATE_REPORT, rows)))
        assert list(df.columns) == ['a', 'b', 'theorem']
        assert list(df['theorem']) == ['THM1', 'EQ7']

    def test_csv_flattens_summary(self):
        df = pd.read_csv(io.StringIO(ReportFormatter('csv').render(INTEGRATE_REPORT)))
        assert len(df) == 1
        assert df.loc[0, 'enclosure_theorem'] == 'THM1'
        assert df.loc[0, 'estimate'] == INTEGRATE_REPORT['estimate']

    def test_csv_uses_properties(self):
        df = pd.read_csv(io.StringIO(ReportFormatter('csv').render(VERIFY_REPORT)))
        assert list(df['name']) == ['representation-1', 'bound-THM1']

    def test_text_summary(self):
        text = ReportFormatter('text').render(INTEGRATE_REPORT)
        assert text.startswith('📊 SIMPREF integrate')
        assert 'THM1' in text
        assert 'sampled-range' in text

    def test_text_properties(self):
        text = ReportFormatter('text').render(VERIFY_REPORT)
        assert '✅ representation-1' in text
        assert '❌ bound-THM1' in text
        assert '1/2 properties passed' in text

    def test_text_error(self):
        text = ReportFormatter('text').render({'command': 'integrate', 'error': 'boom', 'exit': 1})
        assert '❌ Error: boom' in text

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            ReportFormatter('xml')
