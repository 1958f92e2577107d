#!/usr/bin/env python3
"""
Non-overlapping q-gram frequencies of an SLP-compressed text.

Every maximal chain of overlapping occurrences ("cover") of a gram is
attributed to the lowest variable in which it is closed, i.e. stays clear of
the first and last ``q - 1`` positions. That variable's seam window receives
the weight ``vOcc(X_i) * nOcc(cover)`` at the position of the gram; summing
the weights of each gram over all windows yields its count in the text.
Wrapping the text in ``q - 1`` sentinels on each side makes every cover of
the text closed in some variable.
"""

from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from slpgram.config.settings import get_settings
from slpgram.core.covers import cover_width, crossing_cover, crossing_range
from slpgram.core.errors import InvariantError
from slpgram.core.logger import get_logger, log_execution_time
from slpgram.core.occdp import DpTables, nocc_in_crossing_cover
from slpgram.core.report import FreqReport
from slpgram.core.slp import (
    SENTINELS,
    MetaTable,
    Slp,
    Symbols,
    Terminal,
    augment_with_sentinels,
    boundary_window,
    compute_meta,
)
from slpgram.core.textalg import Cover, weighted_qgram_freqs
from slpgram.utils.context import LogContext, capture_context

logger = get_logger(__name__)


@dataclass(frozen=True)
class VariableContribution:
    """The seam window of one variable and the weights it claims."""

    variable: int
    window: Symbols
    weights: Tuple[int, ...]


@dataclass(frozen=True)
class WeightedCorpus:
    """Concatenated seam windows ``z`` with weights ``w``; ``segments`` holds (offset, length) per window."""

    z: Symbols
    w: Tuple[int, ...]
    segments: Tuple[Tuple[int, int], ...]


def _is_closed(cover: Cover, length: int, q: int) -> bool:
    return q - 1 < cover.b and cover.e < length - q + 2


def variable_contribution(meta: MetaTable, tables: DpTables, index: int, check: bool = True) -> VariableContribution:
    """
    Weights claimed by ``X_index`` for the covers closed in it.

    Offsets whose cover was already seen in this window are skipped, so each
    cover is weighted once.
    """
    q = meta.q
    left, _ = meta.children(index)
    split = meta.length(left)
    length = meta.length(index)
    vocc = meta[index].vocc
    window, offset = boundary_window(meta, index, cover_width(q))
    weights = [0] * len(window)
    seen: Dict[Cover, Symbols] = {}
    for j in crossing_range(meta, index):
        cover = crossing_cover(meta, tables.covers, index, j)
        if not _is_closed(cover, length, q):
            continue
        position = offset - split + j
        gram = window[position - 1 : position - 1 + q]
        if cover in seen:
            if check and seen[cover] != gram:
                raise InvariantError(f"variable {index}: cover {cover} shared by two different grams")
            continue
        seen[cover] = gram
        weights[position - 1] = vocc * nocc_in_crossing_cover(meta, tables, index, j)
    return VariableContribution(index, window, tuple(weights))


@capture_context(phase="contributions")
@log_execution_time()
def collect_contributions(meta: MetaTable, tables: DpTables, check: bool = True) -> List[VariableContribution]:
    """Contributions of every reachable pair variable at least ``q`` long."""
    contributions = []
    for index in meta.variables():
        if not meta.is_pair(index) or meta.length(index) < meta.q or not meta[index].vocc:
            continue
        with LogContext(variable=index):
            contributions.append(variable_contribution(meta, tables, index, check))
    return contributions


@capture_context(phase="corpus")
def assemble_corpus(contributions: Sequence[VariableContribution], q: int, check: bool = True) -> WeightedCorpus:
    """
    Concatenate the windows without separators.

    Raises:
        InvariantError: if a weighted gram would run past the end of its window.
    """
    z: List[int] = []
    w: List[int] = []
    segments = []
    for contribution in contributions:
        size = len(contribution.window)
        if check:
            for position, weight in enumerate(contribution.weights, start=1):
                if weight and position + q - 1 > size:
                    raise InvariantError(
                        f"variable {contribution.variable}: weighted gram at {position} leaves its window of {size}"
                    )
        segments.append((len(z), size))
        z.extend(contribution.window)
        w.extend(contribution.weights)
    return WeightedCorpus(tuple(z), tuple(w), tuple(segments))


def _unigram_counts(slp: Slp) -> FreqReport:
    meta = compute_meta(slp, 1)
    counts: Dict[Symbols, int] = {}
    for index, rule in enumerate(slp.rules, start=1):
        vocc = meta[index].vocc
        if isinstance(rule, Terminal) and vocc:
            counts[(rule.symbol,)] = counts.get((rule.symbol,), 0) + vocc
    return FreqReport(counts)


@log_execution_time(level="INFO")
def count_qgrams(slp: Slp, q: int, check: Optional[bool] = None, corrupt: bool = False) -> FreqReport:
    """
    Non-overlapping frequency of every q-gram of the text derived by ``slp``.

    Args:
        slp: The compressed text.
        q: Gram length, at least 1.
        check: Run internal consistency checks (default: SLPGRAM_CHECK_INVARIANTS).
        corrupt: Add one to the first claimed weight; used to exercise verification.

    Returns:
        The report, sorted by symbol codes.
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if check is None:
        check = get_settings().check_invariants
    with LogContext(q=q):
        if q == 1:
            return _unigram_counts(slp)
        if q > slp.length():
            logger.info(f"text of length {slp.length()} is shorter than q={q}")
            return FreqReport()

        augmented = augment_with_sentinels(slp, q)
        meta = compute_meta(augmented, q)
        tables = DpTables.build(meta)
        if check:
            tables.check_invariants()
        contributions = collect_contributions(meta, tables, check)
        if corrupt:
            contributions = _corrupt(contributions)
        corpus = assemble_corpus(contributions, q, check)
        logger.debug(f"weighted corpus of length {len(corpus.z)} from {len(corpus.segments)} windows")

        freqs = weighted_qgram_freqs(corpus.z, q, corpus.w)
        if check and any(count < 0 for count in freqs.values()):
            raise InvariantError("a q-gram received a negative weight")
        # grams spanning two windows of z carry weight 0 and do not occur in the text
        return FreqReport(
            (gram, count)
            for gram, count in freqs.items()
            if count > 0 and not any(symbol in SENTINELS for symbol in gram)
        )


def _corrupt(contributions: List[VariableContribution]) -> List[VariableContribution]:
    corrupted = list(contributions)
    for k, contribution in enumerate(corrupted):
        for position, weight in enumerate(contribution.weights):
            if weight:
                weights = list(contribution.weights)
                weights[position] += 1
                logger.warning(f"corrupting variable {contribution.variable} at window position {position + 1}")
                corrupted[k] = replace(contribution, weights=tuple(weights))
                return corrupted
    return corrupted
