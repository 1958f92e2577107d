#!/usr/bin/env python3
"""
Plain-string algorithms over symbol tuples.

Used both on the short boundary windows of the grammar DP and for the final
aggregation of weighted q-gram frequencies. Positions are 1-based.
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

Symbols = Tuple[int, ...]
OccList = List[int]


@dataclass(frozen=True, order=True)
class Cover:
    """An interval ``[b, e]`` of 1-based positions."""

    b: int
    e: int

    def __post_init__(self):
        if self.b > self.e:
            raise ValueError(f"cover start {self.b} after its end {self.e}")

    @property
    def length(self) -> int:
        return self.e - self.b + 1

    def shifted(self, offset: int) -> "Cover":
        return Cover(self.b + offset, self.e + offset)


def _failure_table(pattern: Sequence[int]) -> List[int]:
    """``fail[k]``: length of the longest proper border of ``pattern[:k+1]``."""
    fail = [0] * len(pattern)
    k = 0
    for j in range(1, len(pattern)):
        while k and pattern[j] != pattern[k]:
            k = fail[k - 1]
        if pattern[j] == pattern[k]:
            k += 1
        fail[j] = k
    return fail


def kmp_occurrences(text: Sequence[int], pattern: Sequence[int]) -> OccList:
    """
    All start positions of ``pattern`` in ``text`` in O(|text| + |pattern|).

    Args:
        text: Symbol sequence to search.
        pattern: Non-empty symbol sequence.

    Returns:
        Ascending 1-based start positions.
    """
    if not pattern:
        raise ValueError("pattern must not be empty")
    m = len(pattern)
    fail = _failure_table(pattern)
    occurrences: OccList = []
    k = 0
    for i, symbol in enumerate(text):
        while k and symbol != pattern[k]:
            k = fail[k - 1]
        if symbol == pattern[k]:
            k += 1
        if k == m:
            occurrences.append(i - m + 2)
            k = fail[k - 1]
    return occurrences


def chain_bounds(occurrences: Sequence[int], index: int, q: int) -> Tuple[int, int]:
    """
    Indices of the first and last element of the overlap chain through ``occurrences[index]``.

    Consecutive chain elements are at most ``q - 1`` apart.
    """
    lo = hi = index
    while lo > 0 and occurrences[lo] - occurrences[lo - 1] <= q - 1:
        lo -= 1
    while hi + 1 < len(occurrences) and occurrences[hi + 1] - occurrences[hi] <= q - 1:
        hi += 1
    return lo, hi


def loc_plain(text: Sequence[int], q: int, j: int) -> Cover:
    """
    Longest overlapping cover of the q-gram starting at ``j``.

    Args:
        text: Symbol sequence.
        q: Gram length.
        j: Start of the gram, ``1 <= j`` and ``j + q - 1 <= len(text)``.

    Returns:
        ``Cover(b, e)``: ``b`` is the first and ``e - q + 1`` the last
        occurrence of the maximal chain of overlapping occurrences through ``j``.
    """
    if q < 1 or j < 1 or j + q - 1 > len(text):
        raise ValueError(f"no {q}-gram starts at position {j} of a text of length {len(text)}")
    occurrences = kmp_occurrences(text, text[j - 1 : j + q - 1])
    lo, hi = chain_bounds(occurrences, bisect_left(occurrences, j), q)
    return Cover(occurrences[lo], occurrences[hi] + q - 1)


def greedy_left(occurrences: Sequence[int], m: int, after: int = 0) -> OccList:
    """Left-priority picks from sorted ``occurrences``; only starts ``> after`` count."""
    picks: OccList = []
    free = after + 1
    for position in occurrences:
        if position >= free:
            picks.append(position)
            free = position + m
    return picks


def greedy_right(occurrences: Sequence[int], m: int) -> OccList:
    """Right-priority picks from sorted ``occurrences``, returned ascending."""
    picks: OccList = []
    for position in reversed(occurrences):
        if not picks or position + m <= picks[-1]:
            picks.append(position)
    picks.reverse()
    return picks


def lnocc_greedy(text: Sequence[int], pattern: Sequence[int]) -> OccList:
    """LnOcc: repeatedly take the leftmost occurrence not overlapping the previous pick."""
    return greedy_left(kmp_occurrences(text, pattern), len(pattern))


def rnocc_greedy(text: Sequence[int], pattern: Sequence[int]) -> OccList:
    """RnOcc: repeatedly take the rightmost occurrence ending before the previous pick."""
    return greedy_right(kmp_occurrences(text, pattern), len(pattern))


def nocc(text: Sequence[int], pattern: Sequence[int]) -> int:
    return len(lnocc_greedy(text, pattern))


def nocc_decomposed(text: Sequence[int], pattern: Sequence[int], i: int) -> Optional[int]:
    """
    Non-overlapping count of ``pattern`` assembled from three independent parts.

    With ``u1 = max LnOcc(text[1:i-1]) + |pattern| - 1`` and
    ``u2 = i - 1 + min RnOcc(text[i:])`` the count is
    ``|LnOcc(text[1:u1])| + nOcc(text[u1+1:u2-1]) + |RnOcc(text[u2:])|``.

    Returns:
        The three-part sum, or None when ``u1`` or ``u2`` does not exist.
    """
    if not 1 <= i <= len(text):
        raise ValueError(f"split position {i} outside 1..{len(text)}")
    m = len(pattern)
    left = lnocc_greedy(text[: i - 1], pattern)
    right = rnocc_greedy(text[i - 1 :], pattern)
    if not left or not right:
        return None
    u1 = left[-1] + m - 1
    u2 = i - 1 + right[0]
    return (
        len(lnocc_greedy(text[:u1], pattern))
        + nocc(text[u1 : u2 - 1], pattern)
        + len(rnocc_greedy(text[u2 - 1 :], pattern))
    )


def suffix_array(text: Sequence[int]) -> List[int]:
    """
    Suffix array by prefix doubling, O(N log² N) with tuple sort keys.

    Returns:
        1-based suffix starts in lexicographic order.
    """
    n = len(text)
    if not n:
        raise ValueError("suffix array of an empty text")
    alphabet = {symbol: rank for rank, symbol in enumerate(sorted(set(text)))}
    rank = [alphabet[symbol] for symbol in text]
    sa = list(range(n))
    k = 1
    while True:
        keys = [(rank[i], rank[i + k] if i + k < n else -1) for i in range(n)]
        sa.sort(key=keys.__getitem__)
        fresh = [0] * n
        for idx in range(1, n):
            fresh[sa[idx]] = fresh[sa[idx - 1]] + (keys[sa[idx]] != keys[sa[idx - 1]])
        rank = fresh
        if rank[sa[-1]] == n - 1:
            break
        k *= 2
    return [start + 1 for start in sa]


def lcp_array(text: Sequence[int], sa: Sequence[int]) -> List[int]:
    """
    Kasai rank scan: ``lcp[0] = 0`` and ``lcp[r]`` is the longest common
    prefix of the suffixes at ranks ``r - 1`` and ``r`` (0-based ranks).
    """
    n = len(text)
    if len(sa) != n:
        raise ValueError("suffix array does not match the text")
    rank = [0] * n
    for r, start in enumerate(sa):
        rank[start - 1] = r
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        other = sa[r - 1] - 1
        while i + h < n and other + h < n and text[i + h] == text[other + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def weighted_qgram_freqs(text: Sequence[int], q: int, w: Sequence[int]) -> Dict[Symbols, int]:
    """
    Sum of ``w`` over the occurrences of every q-gram of ``text``.

    Suffixes sharing a q-gram form a contiguous run of the suffix array where
    the LCP stays at least ``q``; each run is summed once.

    Args:
        text: Symbol sequence.
        q: Gram length, at least 1.
        w: One integer weight per text position.

    Returns:
        Mapping from each occurring q-gram to its weight total (possibly 0).
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if len(w) != len(text):
        raise ValueError(f"{len(w)} weights for a text of length {len(text)}")
    freqs: Dict[Symbols, int] = {}
    n = len(text)
    if n < q:
        return freqs
    sa = suffix_array(text)
    lcp = lcp_array(text, sa)
    r = 0
    while r < n:
        start = sa[r]
        run_end = r + 1
        while run_end < n and lcp[run_end] >= q:
            run_end += 1
        if start + q - 1 <= n:
            freqs[tuple(text[start - 1 : start - 1 + q])] = sum(w[sa[k] - 1] for k in range(r, run_end))
        r = run_end
    return freqs
