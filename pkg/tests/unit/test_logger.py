#!/usr/bin/env python3

"""
Unit tests for slpgram logging, log context and the error decorator.
"""

import io
import json
import logging
import sys
import unittest
from pathlib import Path
from unittest.mock import patch

# Add the parent directory to sys.path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from slpgram.core.logger import JSONFormatter, get_logger, log_execution_time, setup_logging
from slpgram.decorators.error_handling import log_errors
from slpgram.utils.context import ContextFilter, LogContext, capture_context


class TestLogger(unittest.TestCase):
    """Test the core logger functionality."""

    def setUp(self):
        """Start every test without context."""
        LogContext.clear_context()

    def test_setup_logging_basic(self):
        """Test basic logging setup."""
        logger = setup_logging(name="slpgram.test", level="INFO", rich_logging=False, json_format=False)

        self.assertEqual(logger.name, "slpgram.test")
        self.assertEqual(logger.level, logging.INFO)
        self.assertEqual(len(logger.handlers), 1)

        with self.assertLogs(logger, level="INFO") as cm:
            logger.info("Test message")
        self.assertIn("Test message", cm.output[0])

    def test_setup_is_idempotent(self):
        """Calling setup twice must not stack handlers."""
        setup_logging(name="slpgram.twice", level="DEBUG", rich_logging=False)
        logger = setup_logging(name="slpgram.twice", level="DEBUG", rich_logging=False)
        self.assertEqual(len(logger.handlers), 1)
        self.assertEqual(len(logger.handlers[0].filters), 1)

    def test_unknown_level_falls_back(self):
        logger = setup_logging(name="slpgram.fallback", level="LOUD", console=False)
        self.assertEqual(logger.level, logging.WARNING)
        self.assertEqual(logger.handlers, [])

    def test_handlers_write_to_stderr(self):
        stderr = io.StringIO()
        with patch.object(sys, "stderr", stderr):
            logger = setup_logging(name="slpgram.stderr", level="INFO", rich_logging=False, json_format=False)
            logger.propagate = False
            logger.info("to stderr")
        self.assertIn("to stderr", stderr.getvalue())

    def test_json_output_with_context(self):
        stderr = io.StringIO()
        with patch.object(sys, "stderr", stderr):
            logger = setup_logging(name="slpgram.json", level="INFO", json_format=True)
            logger.propagate = False
            with LogContext(q=3, variable=7):
                logger.info("counted")
        record = json.loads(stderr.getvalue().strip())
        self.assertEqual(record["message"], "counted")
        self.assertEqual(record["level"], "INFO")
        self.assertEqual(record["q"], 3)
        self.assertEqual(record["variable"], 7)

    def test_child_logger_records_carry_context(self):
        stderr = io.StringIO()
        with patch.object(sys, "stderr", stderr):
            parent = setup_logging(name="slpgram.family", level="INFO", json_format=True)
            parent.propagate = False
            with LogContext(q=3, command="count"):
                get_logger("slpgram.family.pipeline").info("phase done")
        record = json.loads(stderr.getvalue().strip())
        self.assertEqual(record["name"], "slpgram.family.pipeline")
        self.assertEqual(record["q"], 3)
        self.assertEqual(record["command"], "count")

    def test_get_logger(self):
        self.assertEqual(get_logger("slpgram.core.covers").name, "slpgram.core.covers")
        self.assertEqual(get_logger().name, __name__)

    def test_json_formatter_exception(self):
        try:
            raise ValueError("boom")
        except ValueError:
            record = logging.LogRecord("x", logging.ERROR, __file__, 1, "failed", None, sys.exc_info())
        data = json.loads(JSONFormatter().format(record))
        self.assertEqual(data["message"], "failed")
        self.assertIn("ValueError: boom", data["exception"])


class TestLogContext(unittest.TestCase):
    """Test context propagation onto records."""

    def setUp(self):
        LogContext.clear_context()

    def test_nested_context(self):
        with LogContext(command="count"):
            with LogContext(q=2):
                self.assertEqual(LogContext.get_context(), {"command": "count", "q": 2})
            self.assertEqual(LogContext.get_context(), {"command": "count"})
        self.assertEqual(LogContext.get_context(), {})

    def test_capture_context(self):
        @capture_context(phase="covers")
        def current():
            return LogContext.get_context()

        self.assertEqual(current(), {"phase": "covers"})
        self.assertEqual(LogContext.get_context(), {})

    def test_filter_copies_fields(self):
        record = logging.LogRecord("x", logging.INFO, __file__, 1, "msg", None, None)
        with LogContext(variable=4):
            self.assertTrue(ContextFilter().filter(record))
        self.assertEqual(record.variable, 4)
        self.assertEqual(record.context, {"variable": 4})


class TestDecorators(unittest.TestCase):
    """Test the timing and error logging decorators."""

    def test_log_execution_time(self):
        logger = logging.getLogger("slpgram.timing")

        @log_execution_time(logger=logger, level="INFO")
        def work(x):
            return x * 2

        with self.assertLogs(logger, level="INFO") as cm:
            self.assertEqual(work(4), 8)
        self.assertIn("Finished work", cm.output[0])

    def test_log_execution_time_reraises(self):
        @log_execution_time()
        def broken():
            raise KeyError("missing")

        with self.assertRaises(KeyError):
            broken()

    def test_log_errors_reraises(self):
        @log_errors(log_level="WARNING")
        def parse(data):
            raise ValueError(f"bad {data!r}")

        with self.assertLogs("slpgram.decorators.error_handling", level="WARNING") as cm:
            with self.assertRaises(ValueError):
                parse(b"SLP")
        self.assertIn("Exception in parse: ValueError", cm.output[0])

    def test_log_errors_swallows(self):
        @log_errors(reraise=False, include_traceback=False)
        def parse():
            raise RuntimeError("nope")

        with self.assertLogs("slpgram.decorators.error_handling", level="ERROR"):
            self.assertIsNone(parse())

    def test_log_errors_truncates_arguments(self):
        captured = {}

        @log_errors(max_arg_length=5)
        def peek(data):
            captured.update(LogContext.get_context())
            return len(data)

        self.assertEqual(peek("x" * 50), 50)
        self.assertEqual(captured["arg_data"], "xxxxx...")
        self.assertEqual(captured["function"], "peek")


if __name__ == "__main__":
    unittest.main()
