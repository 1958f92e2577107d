#!/usr/bin/env python3
"""
Longest overlapping covers computed on the grammar.

For every variable ``X_i`` and offset ``1 <= j <= min(2(q-1), |X_i|)`` the
right cover is ``(j, be)``: the gram starting at ``j`` and the chain of
overlapping occurrences of that gram running rightwards from it. The left
cover is the same thing read from the right end of ``X_i``. Both are filled
in variable order from the children's tables and an O(q) window around the
seam ``X_l | X_r``; the left table is the right table of the mirrored
grammar.
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from slpgram.core.errors import InvariantError
from slpgram.core.logger import get_logger, log_execution_time
from slpgram.core.slp import MetaTable, Symbols, boundary_window
from slpgram.core.textalg import Cover, kmp_occurrences

logger = get_logger(__name__)

Row = Tuple[int, ...]


def cover_width(q: int) -> int:
    """Number of offsets kept per variable in the cover tables."""
    return 2 * (q - 1)


@dataclass(frozen=True)
class Seam:
    """A boundary window of a pair variable, addressed by absolute positions."""

    window: Symbols
    split: int
    start: int

    @classmethod
    def of(cls, meta: MetaTable, index: int, width: int) -> "Seam":
        window, offset = boundary_window(meta, index, width)
        split = meta.length(meta.children(index)[0])
        return cls(window, split, split - offset + 1)

    @property
    def end(self) -> int:
        return self.start + len(self.window) - 1

    def gram(self, position: int, q: int) -> Symbols:
        if position < self.start or position + q - 1 > self.end:
            raise InvariantError(f"gram at {position} leaves the window [{self.start}, {self.end}]")
        offset = position - self.start
        return self.window[offset : offset + q]

    def occurrences(self, gram: Sequence[int]) -> List[int]:
        """Absolute starts of ``gram`` inside the window."""
        return [p + self.start - 1 for p in kmp_occurrences(self.window, gram)]


def index_of(occurrences: Sequence[int], position: int) -> int:
    k = bisect_left(occurrences, position)
    if k == len(occurrences) or occurrences[k] != position:
        raise InvariantError(f"position {position} is not an occurrence in the window")
    return k


class RightCoverTable:
    """``be`` of the right cover of every (variable, offset)."""

    def __init__(self, q: int, lengths: Sequence[int], rows: Sequence[Row]):
        self.q = q
        self.lengths = tuple(lengths)
        self.rows = tuple(rows)

    def width(self, index: int) -> int:
        return len(self.rows[index - 1])

    def be(self, index: int, j: int) -> int:
        row = self.rows[index - 1]
        if not 1 <= j <= len(row):
            raise IndexError(f"offset {j} outside 1..{len(row)} for variable {index}")
        return row[j - 1]

    def entry(self, index: int, j: int) -> Cover:
        return Cover(j, self.be(index, j))

    def entry_count(self) -> int:
        return sum(len(row) for row in self.rows)


class LeftCoverTable:
    """
    ``eb`` of the left cover of every (variable, offset).

    Offset ``j`` names the gram ending at ``|X_i| - j + 1``. Values are read
    off the right covers of the mirrored grammar.
    """

    def __init__(self, mirror: RightCoverTable):
        self.mirror = mirror
        self.q = mirror.q
        self.lengths = mirror.lengths

    def width(self, index: int) -> int:
        return self.mirror.width(index)

    def eb(self, index: int, j: int) -> int:
        return self.lengths[index - 1] - self.mirror.be(index, j) + 1

    def entry(self, index: int, j: int) -> Cover:
        return Cover(self.eb(index, j), self.lengths[index - 1] - j + 1)

    def entry_count(self) -> int:
        return self.mirror.entry_count()


class CoverTables(NamedTuple):
    right: RightCoverTable
    left: LeftCoverTable

    def mirrored(self) -> "CoverTables":
        """The cover tables of the mirrored grammar."""
        return CoverTables(self.left.mirror, LeftCoverTable(self.right))

    def entry_count(self) -> int:
        return self.right.entry_count() + self.left.entry_count()


def walk_right(occurrences: Sequence[int], k: int, q: int, split: int) -> Tuple[int, Optional[int]]:
    """
    Follow the chain forward from ``occurrences[k]``.

    Returns:
        The last element reached and the first element past ``split``
        (None when the chain ends inside the left child or on the seam).
    """
    last = occurrences[k]
    while last <= split:
        k += 1
        if k == len(occurrences) or occurrences[k] - last > q - 1:
            return last, None
        last = occurrences[k]
    return last, last


def _seam_cover_end(meta: MetaTable, rows: List[Row], index: int, j: int, seam: Seam) -> int:
    q = meta.q
    left, right = meta.children(index)
    split = seam.split
    gram = meta[index].pre[j - 1 : j + q - 1]
    occurrences = seam.occurrences(gram)
    if j + q - 1 <= split:
        last_left = rows[left - 1][j - 1] - q + 1
        if last_left < seam.start:
            return last_left + q - 1
        k = index_of(occurrences, last_left)
    else:
        k = index_of(occurrences, j)
    last, first_right = walk_right(occurrences, k, q, split)
    if first_right is None:
        return last + q - 1
    return split + rows[right - 1][first_right - split - 1]


@log_execution_time()
def build_right_covers(meta: MetaTable) -> RightCoverTable:
    """
    Right covers of every variable, children first.

    Args:
        meta: Metadata with context width ``3(q-1)``, ``q >= 2``.

    Returns:
        The filled table; entries with ``j + q - 1 > |X_i|`` hold ``|X_i|``.
    """
    q = meta.q
    if q < 2:
        raise ValueError("cover tables need q >= 2")
    width = cover_width(q)
    rows: List[Row] = []
    for index in meta.variables():
        length = meta.length(index)
        span = min(width, length)
        if not meta.is_pair(index):
            rows.append((length,) * span)
            continue
        left, right = meta.children(index)
        split = meta.length(left)
        seam: Optional[Seam] = None
        row: List[int] = []
        for j in range(1, span + 1):
            if j + q - 1 > length:
                row.append(length)
            elif j > split:
                row.append(split + rows[right - 1][j - split - 1])
            else:
                if seam is None:
                    seam = Seam.of(meta, index, meta.kappa)
                row.append(_seam_cover_end(meta, rows, index, j, seam))
        rows.append(tuple(row))
    return RightCoverTable(q, [meta.length(i) for i in meta.variables()], rows)


def build_left_covers(meta: MetaTable) -> LeftCoverTable:
    """Left covers, taken from the right covers of the mirrored grammar."""
    return LeftCoverTable(build_right_covers(meta.mirrored()))


def build_cover_tables(meta: MetaTable) -> CoverTables:
    return CoverTables(build_right_covers(meta), build_left_covers(meta))


def crossing_range(meta: MetaTable, index: int) -> range:
    """Offsets ``j`` of ``X_index`` whose gram is examined around the seam."""
    q = meta.q
    left, _ = meta.children(index)
    split = meta.length(left)
    low = max(1, split - cover_width(q) + 1)
    high = min(split + q - 1, meta.length(index) - q + 1)
    return range(low, high + 1)


class CrossingChain(NamedTuple):
    """
    The part of a chain visible in the seam window of width ``2(q-1)``.

    Walking left from ``j``, ``left_anchor`` is the first chain element
    lying wholly in ``X_l``; walking right, ``right_anchor`` is the first one
    starting in ``X_r``. ``first``/``last`` are the elements the two walks
    stopped at.
    """

    seam: Seam
    occurrences: List[int]
    first: int
    last: int
    left_anchor: Optional[int]
    right_anchor: Optional[int]


def crossing_chain(meta: MetaTable, index: int, j: int) -> CrossingChain:
    q = meta.q
    if not meta.is_pair(index) or j not in crossing_range(meta, index):
        raise ValueError(f"offset {j} is not a crossing offset of variable {index}")
    seam = Seam.of(meta, index, cover_width(q))
    split = seam.split
    occurrences = seam.occurrences(seam.gram(j, q))
    k = index_of(occurrences, j)

    lo = k
    while occurrences[lo] > split - q + 1 and lo > 0 and occurrences[lo] - occurrences[lo - 1] <= q - 1:
        lo -= 1
    left_anchor = occurrences[lo] if occurrences[lo] <= split - q + 1 else None

    last, right_anchor = walk_right(occurrences, k, q, split)
    return CrossingChain(seam, occurrences, occurrences[lo], last, left_anchor, right_anchor)


def crossing_cover(meta: MetaTable, covers: CoverTables, index: int, j: int) -> Cover:
    """
    The full longest overlapping cover of the gram at ``j`` in ``X_index``.

    Args:
        meta: Metadata of the grammar.
        covers: Right and left cover tables of the same grammar.
        index: A pair variable ``X_l X_r``.
        j: Offset in ``crossing_range(meta, index)``.

    Returns:
        ``Cover(b, e)`` with absolute positions inside ``X_index``.
    """
    return cover_of_chain(meta, covers, index, crossing_chain(meta, index, j))


def cover_of_chain(meta: MetaTable, covers: CoverTables, index: int, chain: CrossingChain) -> Cover:
    """Extend a seam chain to a full cover with the children's tables."""
    q = meta.q
    left, right = meta.children(index)
    split = chain.seam.split
    if chain.left_anchor is not None:
        b = covers.left.eb(left, split - chain.left_anchor - q + 2)
    else:
        b = chain.first
    if chain.right_anchor is not None:
        e = split + covers.right.be(right, chain.right_anchor - split)
    else:
        e = chain.last + q - 1
    return Cover(b, e)
