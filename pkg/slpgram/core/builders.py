#!/usr/bin/env python3
"""
Grammar construction from raw bytes and a few synthetic families.

``build_balanced`` halves the input recursively; ``build_pairs`` replaces
the most frequent adjacent pair until no pair repeats, then joins what is
left with a balanced tree. Both share rules for identical subtrees.
"""

import heapq
from collections import Counter, defaultdict
from typing import Dict, List, Optional, Sequence, Set, Tuple

from slpgram.core.logger import get_logger, log_execution_time
from slpgram.core.slp import Pair, Rule, Slp, Terminal

logger = get_logger(__name__)


class GrammarBuilder:
    """Appends rules, reusing an existing variable for a repeated rule."""

    def __init__(self):
        self.rules: List[Rule] = []
        self._terminals: Dict[int, int] = {}
        self._pairs: Dict[Tuple[int, int], int] = {}

    def terminal(self, symbol: int) -> int:
        index = self._terminals.get(symbol)
        if index is None:
            self.rules.append(Terminal(symbol))
            index = self._terminals[symbol] = len(self.rules)
        return index

    def pair(self, left: int, right: int) -> int:
        index = self._pairs.get((left, right))
        if index is None:
            self.rules.append(Pair(left, right))
            index = self._pairs[(left, right)] = len(self.rules)
        return index

    def halve(self, variables: Sequence[int]) -> int:
        """Join ``variables`` in order by recursive halving."""
        if not variables:
            raise ValueError("cannot join an empty sequence")
        if len(variables) == 1:
            return variables[0]
        middle = len(variables) // 2
        return self.pair(self.halve(variables[:middle]), self.halve(variables[middle:]))

    def run(self, symbol: int, count: int) -> int:
        """A variable deriving ``symbol * count`` through repeated squaring."""
        if count < 1:
            raise ValueError(f"run length must be positive, got {count}")
        power = self.terminal(symbol)
        result = None
        while True:
            if count & 1:
                result = power if result is None else self.pair(result, power)
            count >>= 1
            if not count:
                return result
            power = self.pair(power, power)

    def finish(self, root: int) -> Slp:
        return Slp(tuple(self.rules), root)


def _require_input(data: bytes) -> None:
    if not data:
        raise ValueError("cannot build a grammar for empty input")


@log_execution_time()
def build_balanced(data: bytes) -> Slp:
    """Balanced grammar: split at the middle, recurse, share equal subtrees."""
    _require_input(data)
    builder = GrammarBuilder()
    slp = builder.finish(builder.halve([builder.terminal(byte) for byte in data]))
    logger.info(f"balanced grammar: {slp.n} rules for {len(data)} bytes")
    return slp


class PairIndex:
    """
    Adjacent pairs of a sequence under repeated replacement.

    The sequence is a linked list over its original positions; every pair
    keeps the set of positions where it starts. A replacement only touches
    the neighbours of each occurrence, and a max-heap with lazily dropped
    entries yields the most frequent pair. Frequencies count runs without
    overlap (``xxx`` holds one ``xx``); heap keys of such pairs start as
    upper bounds and are made exact when they reach the top.
    """

    def __init__(self, sequence: Sequence[int]):
        size = len(sequence)
        self.symbols = list(sequence)
        self.next = list(range(1, size + 1))
        self.prev = list(range(-1, size - 1))
        if size:
            self.next[-1] = -1
        self.occurrences: Dict[Tuple[int, int], Set[int]] = defaultdict(set)
        self.versions: Counter = Counter()
        self.heap: List[Tuple[int, Tuple[int, int], int, bool]] = []
        for i in range(size - 1):
            self.occurrences[(sequence[i], sequence[i + 1])].add(i)
        for pair in self.occurrences:
            self._push(pair)

    def _push(self, pair: Tuple[int, int]) -> None:
        positions = self.occurrences.get(pair)
        if positions and len(positions) >= 2:
            heapq.heappush(self.heap, (-len(positions), pair, self.versions[pair], pair[0] != pair[1]))

    def _frequency(self, pair: Tuple[int, int]) -> int:
        positions = self.occurrences[pair]
        if pair[0] != pair[1]:
            return len(positions)
        count = 0
        last = -1
        for i in sorted(positions):
            if last < 0 or self.next[last] != i:
                count += 1
                last = i
            else:
                last = -1
        return count

    def most_frequent(self) -> Optional[Tuple[Tuple[int, int], int]]:
        """The most frequent pair occurring at least twice, ties to the smaller pair."""
        while self.heap:
            key, pair, version, exact = self.heap[0]
            if version != self.versions[pair] or pair not in self.occurrences:
                heapq.heappop(self.heap)
            elif exact:
                return pair, -key
            else:
                heapq.heappop(self.heap)
                frequency = self._frequency(pair)
                if frequency >= 2:
                    heapq.heappush(self.heap, (-frequency, pair, version, True))
        return None

    def _discard(self, pair: Tuple[int, int], position: int, touched: Set[Tuple[int, int]]) -> None:
        positions = self.occurrences.get(pair)
        if positions is not None:
            positions.discard(position)
            if not positions:
                del self.occurrences[pair]
            touched.add(pair)

    def _add(self, pair: Tuple[int, int], position: int, touched: Set[Tuple[int, int]]) -> None:
        self.occurrences[pair].add(position)
        touched.add(pair)

    def replace(self, pair: Tuple[int, int], variable: int) -> int:
        """Replace the occurrences of ``pair`` left to right by ``variable``; returns how many."""
        first, second = pair
        touched: Set[Tuple[int, int]] = set()
        replaced = 0
        for i in sorted(self.occurrences.pop(pair, ())):
            j = self.next[i]
            if self.symbols[i] != first or j < 0 or self.symbols[j] != second:
                continue
            before, after = self.prev[i], self.next[j]
            if before >= 0:
                self._discard((self.symbols[before], first), before, touched)
            if after >= 0:
                self._discard((second, self.symbols[after]), j, touched)
            self.symbols[i] = variable
            self.symbols[j] = -1
            self.next[i] = after
            if after >= 0:
                self.prev[after] = i
            if before >= 0:
                self._add((self.symbols[before], variable), before, touched)
            if after >= 0:
                self._add((variable, self.symbols[after]), i, touched)
            replaced += 1
        self.versions[pair] += 1
        touched.discard(pair)
        for other in touched:
            self.versions[other] += 1
            self._push(other)
        return replaced

    def sequence(self) -> List[int]:
        """The current sequence, in order."""
        out = []
        i = 0 if self.symbols else -1
        while i >= 0:
            out.append(self.symbols[i])
            i = self.next[i]
        return out


@log_execution_time()
def build_pairs(data: bytes) -> Slp:
    """
    Pair-replacement grammar.

    Repeatedly replaces the most frequent adjacent pair by a new rule while
    some pair occurs at least twice, then halves the residual sequence.
    """
    _require_input(data)
    builder = GrammarBuilder()
    index = PairIndex([builder.terminal(byte) for byte in data])
    rounds = 0
    while True:
        best = index.most_frequent()
        if best is None:
            break
        pair, _ = best
        index.replace(pair, builder.pair(*pair))
        rounds += 1
    sequence = index.sequence()
    slp = builder.finish(builder.halve(sequence))
    logger.info(f"pair grammar: {rounds} replacements, residual {len(sequence)}, {slp.n} rules")
    return slp


def build_fibonacci(n: int, first: int = ord("b"), second: int = ord("a")) -> Slp:
    """
    Fibonacci-word grammar ``X_1 = b``, ``X_2 = a``, ``X_k = X_{k-1} X_{k-2}``.

    The root ``X_n`` derives a word of length ``Fib(n)``.
    """
    if n < 2:
        raise ValueError(f"a Fibonacci grammar needs at least 2 rules, got {n}")
    rules: List[Rule] = [Terminal(first), Terminal(second)]
    rules.extend(Pair(k - 1, k - 2) for k in range(3, n + 1))
    return Slp(tuple(rules), n)


def build_power(symbol: int, exponent: int) -> Slp:
    """Grammar for ``symbol`` repeated ``exponent`` times, O(log exponent) rules."""
    builder = GrammarBuilder()
    return builder.finish(builder.run(symbol, exponent))


BUILDERS = {"balanced": build_balanced, "pairs": build_pairs}
