"""slpgram - non-overlapping q-gram frequencies of grammar-compressed texts."""

__version__ = "0.1.0"

from slpgram.config.env_loader import get_env, load_env
from slpgram.core.logger import get_logger, setup_logging
from slpgram.core.oracle import oracle_count
from slpgram.core.pipeline import count_qgrams
from slpgram.core.report import FreqReport, format_report
from slpgram.core.slp import Slp, parse_slp, serialize_slp

# Provide convenient imports for users
__all__ = [
    "count_qgrams",
    "oracle_count",
    "FreqReport",
    "format_report",
    "Slp",
    "parse_slp",
    "serialize_slp",
    "get_logger",
    "setup_logging",
    "load_env",
    "get_env",
]
