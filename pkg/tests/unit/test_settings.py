#!/usr/bin/env python3

"""
Unit tests for environment loading and validated settings.
"""

import os
import sys
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from pydantic import ValidationError

# Add the parent directory to sys.path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from slpgram.config.env_loader import get_env, load_env
from slpgram.config.settings import Settings, get_settings, reset_settings


class TestGetEnv(unittest.TestCase):
    """Test typed access to environment variables."""

    def test_conversions(self):
        env = {"SLPGRAM_A": "42", "SLPGRAM_B": "yes", "SLPGRAM_C": "x,y", "SLPGRAM_D": "nan?"}
        with patch.dict(os.environ, env):
            self.assertEqual(get_env("SLPGRAM_A", as_type=int), 42)
            self.assertIs(get_env("SLPGRAM_B", as_type=bool), True)
            self.assertEqual(get_env("SLPGRAM_C", as_type=list), ["x", "y"])
            self.assertEqual(get_env("SLPGRAM_D", 7, as_type=int), 7)
            self.assertEqual(get_env("SLPGRAM_MISSING", "dflt"), "dflt")

    def test_load_env_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "test.env"
            path.write_text("SLPGRAM_FROM_FILE=hello\n")
            with patch.dict(os.environ, {}):
                self.assertTrue(load_env(path, verbose=False))
                self.assertEqual(get_env("SLPGRAM_FROM_FILE"), "hello")


class TestSettings(unittest.TestCase):
    """Test the pydantic settings model."""

    def tearDown(self):
        reset_settings()

    def test_defaults(self):
        settings = Settings()
        self.assertEqual(settings.log_level, "WARNING")
        self.assertEqual(settings.expand_limit, 1_000_000)
        self.assertEqual(settings.build_method, "balanced")
        self.assertTrue(settings.check_invariants)

    def test_from_env(self):
        env = {
            "SLPGRAM_LOG_LEVEL": "debug",
            "SLPGRAM_EXPAND_LIMIT": "500",
            "SLPGRAM_BUILD_METHOD": "pairs",
            "SLPGRAM_CHECK_INVARIANTS": "false",
        }
        with patch.dict(os.environ, env):
            reset_settings()
            settings = get_settings()
        self.assertEqual(settings.log_level, "DEBUG")
        self.assertEqual(settings.expand_limit, 500)
        self.assertEqual(settings.build_method, "pairs")
        self.assertFalse(settings.check_invariants)

    def test_cached_until_reset(self):
        reset_settings()
        self.assertIs(get_settings(), get_settings())

    def test_invalid_values(self):
        with self.assertRaises(ValidationError):
            Settings(log_level="LOUD")
        with self.assertRaises(ValidationError):
            Settings(expand_limit=0)
        with self.assertRaises(ValidationError):
            Settings(build_method="lz77")


if __name__ == "__main__":
    unittest.main()
