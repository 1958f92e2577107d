#!/usr/bin/env python3
"""
q-gram frequency reports and their TSV rendering.

One line per gram, ``<gram>\\t<count>\\n``, sorted by raw symbol codes.
Printable ASCII other than backslash is written literally, every other byte
as ``\\xHH`` with lowercase hex.
"""

import difflib
import re
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

Symbols = Tuple[int, ...]

_ESCAPE = re.compile(r"\\x([0-9a-f]{2})|([\x21-\x5b\x5d-\x7e])")


class FreqReport(Mapping[Symbols, int]):
    """Immutable mapping from q-gram to count, iterated in symbol-code order."""

    def __init__(self, entries: Union[Mapping[Symbols, int], Iterable[Tuple[Symbols, int]]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._entries: Dict[Symbols, int] = dict(sorted((tuple(gram), count) for gram, count in items))

    @classmethod
    def from_text(cls, entries: Mapping[str, int]) -> "FreqReport":
        """Build a report from latin-1 string keys (handy in tests)."""
        return cls({tuple(gram.encode("latin-1")): count for gram, count in entries.items()})

    def __getitem__(self, gram: Symbols) -> int:
        return self._entries[tuple(gram)]

    def __iter__(self) -> Iterator[Symbols]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        return f"FreqReport({self.as_text()!r})"

    def as_text(self) -> Dict[str, int]:
        return {bytes(gram).decode("latin-1"): count for gram, count in self._entries.items()}

    def total(self) -> int:
        return sum(self._entries.values())


def format_gram(gram: Symbols) -> str:
    out = []
    for symbol in gram:
        if not 0 <= symbol <= 0xFF:
            raise ValueError(f"symbol {symbol:#x} cannot appear in a report")
        if 0x21 <= symbol <= 0x7E and symbol != 0x5C:
            out.append(chr(symbol))
        else:
            out.append(f"\\x{symbol:02x}")
    return "".join(out)


def parse_gram(text: str) -> Symbols:
    symbols = []
    position = 0
    while position < len(text):
        match = _ESCAPE.match(text, position)
        if match is None:
            raise ValueError(f"bad gram encoding {text!r} at offset {position}")
        hex_code, literal = match.groups()
        symbols.append(int(hex_code, 16) if hex_code else ord(literal))
        position = match.end()
    return tuple(symbols)


def format_report(report: Mapping[Symbols, int]) -> str:
    return "".join(f"{format_gram(gram)}\t{count}\n" for gram, count in sorted(report.items()))


def parse_report(text: str) -> FreqReport:
    entries = []
    for number, line in enumerate(text.splitlines(), start=1):
        gram, sep, count = line.partition("\t")
        if not sep or not count.isdigit():
            raise ValueError(f"line {number}: expected '<gram>\\t<count>'")
        entries.append((parse_gram(gram), int(count)))
    return FreqReport(entries)


def first_difference(expected: Mapping[Symbols, int], actual: Mapping[Symbols, int]) -> Optional[Symbols]:
    """Smallest gram whose count differs between the two reports."""
    for gram in sorted(set(expected) | set(actual)):
        if expected.get(gram) != actual.get(gram):
            return gram
    return None


def diff_reports(
    expected: Mapping[Symbols, int],
    actual: Mapping[Symbols, int],
    expected_name: str = "oracle",
    actual_name: str = "slpgram",
) -> List[str]:
    """Unified diff of the TSV renderings, empty when the reports agree."""
    return list(
        difflib.unified_diff(
            format_report(expected).splitlines(keepends=True),
            format_report(actual).splitlines(keepends=True),
            fromfile=expected_name,
            tofile=actual_name,
        )
    )
