#!/usr/bin/env python3
"""
Non-overlapping occurrence tables inside covers.

For the right cover ``(j, be)`` of every variable this module keeps the
size of the left-priority greedy set ``LnOcc(X_i[j:be])`` and its two
largest elements; the left covers get the same data for the right-priority
set, read off the mirrored grammar. Two more columns, defined for offsets
``j < q``, hold the largest LnOcc element inside a left cover and the
smallest RnOcc element inside a right cover. Together they answer the
non-overlapping count of any cover crossing a seam in O(q) time.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from slpgram.core.covers import (
    CoverTables,
    Seam,
    build_cover_tables,
    cover_of_chain,
    cover_width,
    crossing_chain,
    index_of,
)
from slpgram.core.errors import InvariantError
from slpgram.core.logger import get_logger, log_execution_time
from slpgram.core.slp import MetaTable
from slpgram.core.textalg import greedy_left

logger = get_logger(__name__)

Value = Optional[int]
ValueRow = Tuple[Value, ...]


class Column:
    """Per-variable rows addressed by ``(variable, offset)``, both 1-based."""

    def __init__(self, rows: Sequence[ValueRow]):
        self.rows = tuple(rows)

    def __call__(self, index: int, j: int) -> Value:
        row = self.rows[index - 1]
        if not 1 <= j <= len(row):
            raise IndexError(f"offset {j} outside 1..{len(row)} for variable {index}")
        return row[j - 1]

    def width(self, index: int) -> int:
        return len(self.rows[index - 1])

    def entry_count(self) -> int:
        return sum(len(row) for row in self.rows)


class LnoccSweep(NamedTuple):
    """Greedy left-priority data of every right cover."""

    counts: Tuple[ValueRow, ...]
    max1: Tuple[ValueRow, ...]
    max2: Tuple[ValueRow, ...]


def _shift(value: Value, offset: int) -> Value:
    return None if value is None else value + offset


def _reflect(meta: MetaTable, rows: Sequence[ValueRow]) -> Tuple[ValueRow, ...]:
    """Map gram starts of the mirrored grammar back to this one."""
    q = meta.q
    reflected = []
    for index, row in enumerate(rows, start=1):
        top = meta.length(index) - q + 2
        reflected.append(tuple(None if value is None else top - value for value in row))
    return tuple(reflected)


def _greedy_extend(
    occurrences: Sequence[int],
    k: int,
    prev: Value,
    q: int,
    split: int,
    state: Tuple[int, Value, Value],
    sweep: LnoccSweep,
    right: int,
) -> Tuple[int, Value, Value]:
    """
    Continue the left-priority greedy along a chain from ``occurrences[k]``.

    ``state`` is (picks so far, last pick, pick before it). The first pick
    inside ``X_r`` hands the rest of the chain over to the right child.
    """
    count, last, before = state
    while k < len(occurrences):
        y = occurrences[k]
        if prev is not None and y - prev > q - 1:
            break
        if last is None or y >= last + q:
            if y > split:
                jr = y - split
                sub = sweep.counts[right - 1][jr - 1]
                top = split + sweep.max1[right - 1][jr - 1]
                if sub >= 2:
                    return count + sub, top, split + sweep.max2[right - 1][jr - 1]
                return count + sub, top, last
            count, last, before = count + 1, y, last
        prev = y
        k += 1
    return count, last, before


@log_execution_time()
def sweep_lnocc(meta: MetaTable, covers: CoverTables) -> LnoccSweep:
    """
    Size and two largest elements of LnOcc inside every right cover.

    Args:
        meta: Grammar metadata, ``q >= 2``.
        covers: Cover tables of the same grammar.

    Returns:
        Three columns sharing the layout of the right cover table.
    """
    q = meta.q
    width = cover_width(q)
    rows = covers.right
    counts: List[ValueRow] = []
    max1: List[ValueRow] = []
    max2: List[ValueRow] = []
    sweep = LnoccSweep(counts, max1, max2)  # type: ignore[arg-type]
    for index in meta.variables():
        length = meta.length(index)
        span = min(width, length)
        if not meta.is_pair(index):
            counts.append((0,) * span)
            max1.append((None,) * span)
            max2.append((None,) * span)
            continue
        left, right = meta.children(index)
        split = meta.length(left)
        seam: Optional[Seam] = None
        row: List[Tuple[int, Value, Value]] = []
        for j in range(1, span + 1):
            if j + q - 1 > length:
                row.append((0, None, None))
            elif j > split:
                jr = j - split
                row.append(
                    (
                        counts[right - 1][jr - 1],
                        _shift(max1[right - 1][jr - 1], split),
                        _shift(max2[right - 1][jr - 1], split),
                    )
                )
            elif j + q - 1 <= split and rows.be(index, j) == rows.be(left, j):
                row.append((counts[left - 1][j - 1], max1[left - 1][j - 1], max2[left - 1][j - 1]))
            else:
                if seam is None:
                    seam = Seam.of(meta, index, meta.kappa)
                occurrences = seam.occurrences(meta[index].pre[j - 1 : j + q - 1])
                if j + q - 1 <= split:
                    last_left = rows.be(left, j) - q + 1
                    start = (counts[left - 1][j - 1], max1[left - 1][j - 1], max2[left - 1][j - 1])
                    state = _greedy_extend(
                        occurrences, index_of(occurrences, last_left) + 1, last_left, q, split, start, sweep, right
                    )
                else:
                    state = _greedy_extend(occurrences, index_of(occurrences, j), None, q, split, (0, None, None), sweep, right)
                row.append(state)
        counts.append(tuple(entry[0] for entry in row))
        max1.append(tuple(entry[1] for entry in row))
        max2.append(tuple(entry[2] for entry in row))
    return LnoccSweep(tuple(counts), tuple(max1), tuple(max2))


def _max_pick_through_seam(
    meta: MetaTable,
    seam: Seam,
    anchor: int,
    last_start: int,
    left: int,
    right: int,
    found: List[ValueRow],
    sweep: LnoccSweep,
) -> Value:
    q = meta.q
    split = seam.split
    occurrences = seam.occurrences(seam.gram(anchor, q))
    k = index_of(occurrences, anchor)
    while occurrences[k] > split - q + 1 and k > 0 and occurrences[k] - occurrences[k - 1] <= q - 1:
        k -= 1

    last: Value
    prev: Value
    if occurrences[k] <= split - q + 1:
        prev = occurrences[k]
        last = found[left - 1][split - prev - q + 1]
        k += 1
    else:
        prev = last = None

    while k < len(occurrences) and occurrences[k] <= last_start:
        y = occurrences[k]
        if prev is not None and y - prev > q - 1:
            break
        if last is None or y >= last + q:
            if y > split:
                jr = y - split
                top = split + sweep.max1[right - 1][jr - 1]
                if top <= last_start:
                    return top
                return split + sweep.max2[right - 1][jr - 1]
            last = y
        prev = y
        k += 1
    if prev != last_start:
        raise InvariantError(f"chain through {anchor} does not reach {last_start} inside the seam window")
    return last


@log_execution_time()
def max_lnocc_in_left_covers(meta: MetaTable, covers: CoverTables, sweep: LnoccSweep) -> Tuple[ValueRow, ...]:
    """
    Largest LnOcc element inside every left cover ``(eb, |X_i|-j+1)``, ``j < q``.

    Beyond the largest greedy pick inside ``X_r`` the cover can hold at most
    one more pick, so the answer is the right child's largest or second
    largest pick, whichever still ends inside the cover.
    """
    q = meta.q
    found: List[ValueRow] = []
    for index in meta.variables():
        length = meta.length(index)
        span = min(q - 1, length)
        if not meta.is_pair(index):
            found.append((None,) * span)
            continue
        left, right = meta.children(index)
        split = meta.length(left)
        seam: Optional[Seam] = None
        row: List[Value] = []
        for j in range(1, span + 1):
            last_start = length - j - q + 2
            if last_start < 1:
                row.append(None)
                continue
            if last_start <= split - q + 1:
                row.append(found[left - 1][j - (length - split) - 1])
                continue
            anchor = last_start
            if last_start > split:
                anchor = split + covers.left.eb(right, j)
                if anchor >= split + q:
                    row.append(_shift(found[right - 1][j - 1], split))
                    continue
            if seam is None:
                seam = Seam.of(meta, index, meta.kappa)
            row.append(_max_pick_through_seam(meta, seam, anchor, last_start, left, right, found, sweep))
        found.append(tuple(row))
    return tuple(found)


@dataclass(frozen=True)
class ExtremalTable:
    """Extremal greedy picks per (variable, offset); absent entries are None."""

    max1_lnocc: Column
    max2_lnocc: Column
    min1_rnocc: Column
    min2_rnocc: Column
    max_lnocc_in_left: Column
    min_rnocc_in_right: Column

    def entry_count(self) -> int:
        return sum(
            column.entry_count()
            for column in (
                self.max1_lnocc,
                self.max2_lnocc,
                self.min1_rnocc,
                self.min2_rnocc,
                self.max_lnocc_in_left,
                self.min_rnocc_in_right,
            )
        )


@dataclass(frozen=True)
class CoverCountTable:
    """Non-overlapping counts inside right covers and inside left covers."""

    nocc_right: Column
    nocc_left: Column

    def entry_count(self) -> int:
        return self.nocc_right.entry_count() + self.nocc_left.entry_count()


def _mirror_inputs(meta: MetaTable, covers: CoverTables) -> Tuple[MetaTable, CoverTables]:
    return meta.mirrored(), covers.mirrored()


def build_extremal_lnocc(meta: MetaTable, covers: CoverTables) -> Tuple[Column, Column]:
    """Largest and second largest LnOcc element inside every right cover."""
    sweep = sweep_lnocc(meta, covers)
    return Column(sweep.max1), Column(sweep.max2)


def build_extremal_rnocc(meta: MetaTable, covers: CoverTables) -> Tuple[Column, Column]:
    """Smallest and second smallest RnOcc element inside every left cover."""
    sweep = sweep_lnocc(*_mirror_inputs(meta, covers))
    return Column(_reflect(meta, sweep.max1)), Column(_reflect(meta, sweep.max2))


def build_max_lnocc_in_left_cover(meta: MetaTable, covers: CoverTables) -> Column:
    return Column(max_lnocc_in_left_covers(meta, covers, sweep_lnocc(meta, covers)))


def build_min_rnocc_in_right_cover(meta: MetaTable, covers: CoverTables) -> Column:
    mirror, mirror_covers = _mirror_inputs(meta, covers)
    found = max_lnocc_in_left_covers(mirror, mirror_covers, sweep_lnocc(mirror, mirror_covers))
    return Column(_reflect(meta, found))


def build_nocc_right(meta: MetaTable, covers: CoverTables) -> Column:
    return Column(sweep_lnocc(meta, covers).counts)


def build_nocc_left(meta: MetaTable, covers: CoverTables) -> Column:
    return Column(sweep_lnocc(*_mirror_inputs(meta, covers)).counts)


@dataclass(frozen=True)
class DpTables:
    """Every table the counting pass reads, built once per grammar and q."""

    meta: MetaTable
    covers: CoverTables
    extremal: ExtremalTable
    counts: CoverCountTable

    @classmethod
    def build(cls, meta: MetaTable) -> "DpTables":
        covers = build_cover_tables(meta)
        mirror, mirror_covers = _mirror_inputs(meta, covers)
        lnocc = sweep_lnocc(meta, covers)
        rnocc = sweep_lnocc(mirror, mirror_covers)
        in_left = max_lnocc_in_left_covers(meta, covers, lnocc)
        in_right = max_lnocc_in_left_covers(mirror, mirror_covers, rnocc)
        extremal = ExtremalTable(
            max1_lnocc=Column(lnocc.max1),
            max2_lnocc=Column(lnocc.max2),
            min1_rnocc=Column(_reflect(meta, rnocc.max1)),
            min2_rnocc=Column(_reflect(meta, rnocc.max2)),
            max_lnocc_in_left=Column(in_left),
            min_rnocc_in_right=Column(_reflect(meta, in_right)),
        )
        tables = cls(meta, covers, extremal, CoverCountTable(Column(lnocc.counts), Column(rnocc.counts)))
        logger.debug(f"built DP tables for {meta.n} variables, q={meta.q}: {tables.entry_count()} entries")
        return tables

    def entry_count(self) -> int:
        return self.covers.entry_count() + self.extremal.entry_count() + self.counts.entry_count()

    def check_invariants(self) -> None:
        """
        Raise InvariantError unless every stored pick lies inside its cover
        and the first/second extremal picks are ordered.
        """
        q = self.meta.q
        right, left = self.covers
        extremal = self.extremal
        for index in self.meta.variables():
            length = self.meta.length(index)
            for j in range(1, right.width(index) + 1):
                if j + q - 1 > length:
                    continue
                be, eb = right.be(index, j), left.eb(index, j)
                top, second = extremal.max1_lnocc(index, j), extremal.max2_lnocc(index, j)
                low, next_low = extremal.min1_rnocc(index, j), extremal.min2_rnocc(index, j)
                if top is None or not j <= top <= be - q + 1:
                    raise InvariantError(f"max LnOcc {top} outside right cover ({j}, {be}) of variable {index}")
                if second is not None and not j <= second < top:
                    raise InvariantError(f"second max LnOcc {second} misplaced in variable {index}, offset {j}")
                if low is None or not eb <= low <= length - j - q + 2:
                    raise InvariantError(f"min RnOcc {low} outside left cover of variable {index}, offset {j}")
                if next_low is not None and not low < next_low <= length - j - q + 2:
                    raise InvariantError(f"second min RnOcc {next_low} misplaced in variable {index}, offset {j}")


def nocc_in_crossing_cover(meta: MetaTable, tables: DpTables, index: int, j: int) -> int:
    """
    Non-overlapping count of the gram at ``j`` inside its full cover.

    The cover is split into the part left of the seam (left-priority set,
    up to ``u1``), the part right of it (right-priority set, from ``u2``)
    and the short stretch between them, which is counted directly in the
    seam window.

    Args:
        meta: Grammar metadata.
        tables: Tables built from ``meta``.
        index: A pair variable.
        j: A crossing offset of ``index``.

    Returns:
        ``nOcc(X_index[b:e], gram)`` for the cover ``(b, e)`` through ``j``.
    """
    q = meta.q
    left, right = meta.children(index)
    chain = crossing_chain(meta, index, j)
    cover = cover_of_chain(meta, tables.covers, index, chain)
    split = chain.seam.split

    if chain.left_anchor is not None:
        jl = split - chain.left_anchor - q + 2
        count_left = tables.counts.nocc_left(left, jl)
        u1 = tables.extremal.max_lnocc_in_left(left, jl) + q - 1
    else:
        count_left, u1 = 0, cover.b - 1
    if chain.right_anchor is not None:
        jr = chain.right_anchor - split
        count_right = tables.counts.nocc_right(right, jr)
        u2 = split + tables.extremal.min_rnocc_in_right(right, jr)
    else:
        count_right, u2 = 0, cover.e + 1

    if u1 + 1 < chain.seam.start or u2 - 1 > chain.seam.end:
        raise InvariantError(f"middle stretch [{u1 + 1}, {u2 - 1}] leaves the seam window of variable {index}")
    middle = [p for p in chain.occurrences if u1 < p and p + q - 1 < u2]
    return count_left + len(greedy_left(middle, q)) + count_right
