#!/usr/bin/env python3
"""
Reference counts obtained by decompressing the grammar.

``oracle_count`` expands the text and runs the left-priority greedy per
gram; ``exhaustive_nocc`` solves the same problem as interval scheduling on
the occurrence list and is used to certify the greedy on small inputs.
"""

from bisect import bisect_right
from collections import defaultdict
from typing import Dict, List, Optional, Sequence

from slpgram.config.settings import get_settings
from slpgram.core.logger import get_logger, log_execution_time
from slpgram.core.report import FreqReport, Symbols
from slpgram.core.slp import Slp, expand
from slpgram.core.textalg import greedy_left, kmp_occurrences

logger = get_logger(__name__)

MAX_EXHAUSTIVE_OCCURRENCES = 20


@log_execution_time()
def oracle_count(slp: Slp, q: int, limit: Optional[int] = None) -> FreqReport:
    """
    Non-overlapping q-gram frequencies of the expanded text.

    Args:
        slp: Grammar to expand.
        q: Gram length, at least 1.
        limit: Largest text length to expand (default: SLPGRAM_EXPAND_LIMIT).

    Returns:
        The report.

    Raises:
        LimitExceededError: when the text is longer than ``limit``.
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if limit is None:
        limit = get_settings().expand_limit
    text = expand(slp, limit)
    starts: Dict[Symbols, List[int]] = defaultdict(list)
    for position in range(len(text) - q + 1):
        starts[text[position : position + q]].append(position + 1)
    logger.debug(f"oracle: {len(starts)} distinct {q}-grams in a text of length {len(text)}")
    return FreqReport({gram: len(greedy_left(positions, q)) for gram, positions in starts.items()})


def exhaustive_nocc(
    text: Sequence[int], pattern: Sequence[int], max_occurrences: int = MAX_EXHAUSTIVE_OCCURRENCES
) -> int:
    """
    Largest set of pairwise non-overlapping occurrences, without greedy choices.

    Every occurrence is an interval of unit weight; ``best[k]`` is the optimum
    over the first ``k`` intervals by finishing position, either skipping
    interval ``k`` or taking it after the last interval finishing before it.

    Raises:
        ValueError: for an empty pattern or more than ``max_occurrences`` occurrences.
    """
    occurrences = kmp_occurrences(text, pattern)
    if len(occurrences) > max_occurrences:
        raise ValueError(f"{len(occurrences)} occurrences exceed the exhaustive limit of {max_occurrences}")
    m = len(pattern)
    finishes = [start + m - 1 for start in occurrences]
    best = [0] * (len(occurrences) + 1)
    for k, start in enumerate(occurrences, start=1):
        compatible = bisect_right(finishes, start - 1)
        best[k] = max(best[k - 1], best[compatible] + 1)
    return best[-1]
