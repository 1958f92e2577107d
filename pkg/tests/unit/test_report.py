#!/usr/bin/env python3

"""
Unit tests for frequency reports and their TSV form.
"""

import sys
import unittest
from pathlib import Path

# Add the parent directory to sys.path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from slpgram.core.report import (
    FreqReport,
    diff_reports,
    first_difference,
    format_gram,
    format_report,
    parse_gram,
    parse_report,
)


class TestGramEncoding(unittest.TestCase):
    """Test escaping of grams."""

    def test_printable(self):
        self.assertEqual(format_gram(tuple(b"ab~!")), "ab~!")

    def test_escaped(self):
        self.assertEqual(format_gram((0x20, 0x5C, 0x0A, 0xFF)), "\\x20\\x5c\\x0a\\xff")

    def test_sentinel_rejected(self):
        with self.assertRaises(ValueError):
            format_gram((0x10000, 97))

    def test_parse(self):
        self.assertEqual(parse_gram("a\\x5cb\\x00"), (97, 0x5C, 98, 0))
        with self.assertRaises(ValueError):
            parse_gram("a b")
        with self.assertRaises(ValueError):
            parse_gram("\\xZZ")


class TestReports(unittest.TestCase):
    """Test report rendering, ordering and comparison."""

    def test_sorted_by_symbol_codes(self):
        report = FreqReport({tuple(b"ba"): 4, tuple(b"ab"): 5, (0x41, 0x42): 1})
        self.assertEqual(format_report(report), "AB\t1\nab\t5\nba\t4\n")

    def test_empty(self):
        self.assertEqual(format_report(FreqReport()), "")
        self.assertEqual(len(FreqReport()), 0)

    def test_mapping_behaviour(self):
        report = FreqReport.from_text({"aa": 3, "ab": 5})
        self.assertEqual(report[tuple(b"aa")], 3)
        self.assertEqual(report, {tuple(b"aa"): 3, tuple(b"ab"): 5})
        self.assertEqual(report.total(), 8)
        self.assertEqual(report.as_text(), {"aa": 3, "ab": 5})
        self.assertIn("FreqReport", repr(report))

    def test_parse_report(self):
        text = "\\x0aa\t2\nab\t5\n"
        report = parse_report(text)
        self.assertEqual(report, {(10, 97): 2, (97, 98): 5})
        self.assertEqual(format_report(report), text)
        with self.assertRaises(ValueError):
            parse_report("ab 5\n")

    def test_first_difference(self):
        expected = FreqReport.from_text({"aa": 3, "ab": 5, "ba": 4})
        actual = FreqReport.from_text({"aa": 3, "ab": 6, "ba": 4})
        self.assertEqual(first_difference(expected, actual), tuple(b"ab"))
        self.assertIsNone(first_difference(expected, expected))
        self.assertEqual(first_difference(expected, FreqReport.from_text({"aa": 3, "ab": 5})), tuple(b"ba"))

    def test_diff(self):
        expected = FreqReport.from_text({"aa": 3, "ab": 5})
        actual = FreqReport.from_text({"aa": 3, "ab": 6})
        self.assertEqual(diff_reports(expected, expected), [])
        diff = "".join(diff_reports(expected, actual))
        self.assertIn("--- oracle", diff)
        self.assertIn("+++ slpgram", diff)
        self.assertIn("-ab\t5", diff)
        self.assertIn("+ab\t6", diff)


if __name__ == "__main__":
    unittest.main()
