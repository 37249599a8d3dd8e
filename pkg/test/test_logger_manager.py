"""
Test cases for LoggerManager

Tests handler setup, formatters and the computation/verification log helpers.
"""

import json
import logging
import os
import sys
import tempfile
import unittest
from pathlib import Path

# Add the parent directory to the path to import the module
sys.path.insert(0, str(Path(__file__).parent.parent))

from morselab.logging.logger_manager import (  # noqa: E402
    ColoredFormatter,
    JSONFormatter,
    LoggerManager,
)


def _record(level=logging.INFO, msg="hello", **extra) -> logging.LogRecord:
    record = logging.LogRecord("morselab.test", level, __file__, 10, msg, None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


class TestLoggerManager(unittest.TestCase):
    """
    Test cases for LoggerManager class.

    @brief Test suite for logging functionality.
    """

    def tearDown(self):
        for name in ("morselab_test", "morselab_file"):
            logger = logging.getLogger(name)
            for handler in logger.handlers[:]:
                handler.close()
                logger.removeHandler(handler)

    def test_init_default(self):
        """
        Test LoggerManager initialization with default parameters.

        @brief Default name, INFO level, one stderr console handler.
        """
        logger_manager = LoggerManager("morselab_test")
        self.assertEqual(logger_manager.name, "morselab_test")
        self.assertEqual(logger_manager.logger.level, logging.INFO)
        self.assertFalse(logger_manager.logger.propagate)
        self.assertEqual(len(logger_manager.logger.handlers), 1)
        self.assertIs(logger_manager.logger.handlers[0].stream, sys.stderr)

    def test_console_disabled(self):
        logger_manager = LoggerManager("morselab_test", {"console": False})
        self.assertEqual(logger_manager.logger.handlers, [])

    def test_plain_console_formatter(self):
        logger_manager = LoggerManager("morselab_test", {"colored": False})
        formatter = logger_manager.logger.handlers[0].formatter
        self.assertNotIsInstance(formatter, ColoredFormatter)

    def test_file_handler_writes_json(self):
        """
        Test the rotating file handler.

        @brief Records land in the file as JSON with extra fields.
        """
        with tempfile.TemporaryDirectory() as tmp:
            config = {"level": "DEBUG", "file": "run.log", "dir": tmp, "console": False}
            logger_manager = LoggerManager("morselab_file", config)
            logger_manager.log_computation("downlink", instance="V=2 E=3", size=3)
            for handler in logger_manager.logger.handlers:
                handler.flush()
            with open(os.path.join(tmp, "run.log"), encoding="utf-8") as f:
                entry = json.loads(f.readline())
            for handler in logger_manager.logger.handlers[:]:
                handler.close()
                logger_manager.logger.removeHandler(handler)
        self.assertEqual(entry["message"], "computation: downlink")
        self.assertEqual(entry["operation"], "downlink")
        self.assertEqual(entry["size"], 3)

    def test_get_logger(self):
        logger_manager = LoggerManager("morselab_test")
        self.assertIs(logger_manager.get_logger(), logger_manager.logger)
        self.assertEqual(logger_manager.get_logger("cli").name, "morselab_test.cli")

    def test_set_level(self):
        logger_manager = LoggerManager("morselab_test")
        logger_manager.set_level("debug")
        self.assertEqual(logger_manager.logger.level, logging.DEBUG)
        for handler in logger_manager.logger.handlers:
            self.assertEqual(handler.level, logging.DEBUG)

    def test_log_verification_levels(self):
        """
        Test verdict logging.

        @brief FAIL is logged as a warning, everything else as info.
        """
        logger_manager = LoggerManager("morselab_test", {"console": False})
        with self.assertLogs("morselab_test", level="INFO") as logs:
            logger_manager.log_verification("down-link", "V=2 E=3", "PASS", "Wedge(0,2)", 0.1)
            logger_manager.log_verification("down-link", "V=3 E=4", "FAIL")
        self.assertEqual([r.levelname for r in logs.records], ["INFO", "WARNING"])
        self.assertEqual(logs.records[0].classification, "Wedge(0,2)")
        self.assertEqual(logs.records[1].verdict, "FAIL")


class TestFormatters(unittest.TestCase):
    """
    Test cases for the formatters.

    @brief JSON and colored formatting of single records.
    """

    def test_json_formatter(self):
        entry = json.loads(JSONFormatter().format(_record(lemma_id="sigma-base")))
        self.assertEqual(entry["level"], "INFO")
        self.assertEqual(entry["logger"], "morselab.test")
        self.assertEqual(entry["message"], "hello")
        self.assertEqual(entry["lemma_id"], "sigma-base")

    def test_json_formatter_exception(self):
        try:
            raise ValueError("bad")
        except ValueError:
            record = _record(level=logging.ERROR)
            record.exc_info = sys.exc_info()
        entry = json.loads(JSONFormatter().format(record))
        self.assertIn("ValueError: bad", entry["exception"])

    def test_colored_formatter(self):
        message = ColoredFormatter("%(levelname)s %(message)s").format(_record(logging.WARNING))
        self.assertEqual(message, "\033[33mWARNING\033[0m hello")


if __name__ == "__main__":
    unittest.main()
