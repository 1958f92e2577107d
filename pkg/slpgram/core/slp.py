#!/usr/bin/env python3
"""
Straight-line programs: data model, text format, derived metadata.

An SLP is a sequence of rules ``X_1 .. X_n``; rule ``i`` is either a
terminal symbol or the concatenation of two earlier variables. Variables
are numbered from 1. Derived strings are never materialized except by
``expand``; everything else works on lengths, occurrence counts and the
bounded prefix/suffix context kept in ``MetaTable``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Set, Tuple, Union

from slpgram.core.errors import LengthOverflowError, LimitExceededError, SlpFormatError, SlpValidationError
from slpgram.core.logger import get_logger

logger = get_logger(__name__)

SENTINEL_BEGIN = 0x10000
SENTINEL_END = 0x10001
SENTINELS = frozenset((SENTINEL_BEGIN, SENTINEL_END))
LENGTH_CAP = 1 << 62

Symbols = Tuple[int, ...]


def is_symbol(code: int) -> bool:
    return 0 <= code <= 0xFF or code in SENTINELS


@dataclass(frozen=True)
class Terminal:
    symbol: int


@dataclass(frozen=True)
class Pair:
    left: int
    right: int


Rule = Union[Terminal, Pair]


@dataclass(frozen=True)
class Slp:
    """A validated straight-line program deriving ``val(X_root)``."""

    rules: Tuple[Rule, ...]
    root: int

    def __post_init__(self):
        if not self.rules:
            raise SlpValidationError("an SLP needs at least one rule")
        for index, rule in enumerate(self.rules, start=1):
            if isinstance(rule, Terminal):
                if not is_symbol(rule.symbol):
                    raise SlpValidationError(f"variable {index}: invalid symbol code {rule.symbol}")
            elif isinstance(rule, Pair):
                for child in (rule.left, rule.right):
                    if not 1 <= child < index:
                        raise SlpValidationError(f"variable {index}: child {child} is not an earlier variable")
            else:
                raise SlpValidationError(f"variable {index}: unknown rule {rule!r}")
        if not 1 <= self.root <= len(self.rules):
            raise SlpValidationError(f"root {self.root} out of range 1..{len(self.rules)}")
        # Evaluated eagerly so an oversized grammar never gets constructed
        _ = self.lengths

    @property
    def n(self) -> int:
        return len(self.rules)

    def rule(self, index: int) -> Rule:
        return self.rules[index - 1]

    @cached_property
    def lengths(self) -> Tuple[int, ...]:
        """Derived lengths, 1-based (slot 0 is unused and holds 0)."""
        lengths = [0]
        for index, rule in enumerate(self.rules, start=1):
            if isinstance(rule, Terminal):
                lengths.append(1)
            else:
                length = lengths[rule.left] + lengths[rule.right]
                if length >= LENGTH_CAP:
                    raise LengthOverflowError(index)
                lengths.append(length)
        return tuple(lengths)

    def length(self, index: Optional[int] = None) -> int:
        return self.lengths[self.root if index is None else index]


def _parse_uint(token: bytes, what: str, line: int) -> int:
    if not token or not token.isdigit():
        raise SlpFormatError(f"expected a decimal {what}, got {token.decode('latin-1')!r}", line)
    return int(token)


def parse_slp(data: bytes) -> Slp:
    """
    Parse the SLP text format.

    Args:
        data: Whole file contents.

    Returns:
        The validated grammar.

    Raises:
        SlpFormatError: with the 1-based line of the first problem.
    """
    if not data.endswith(b"\n"):
        raise SlpFormatError("missing trailing newline", data.count(b"\n") + 1)
    lines = data[:-1].split(b"\n")

    header = lines[0].split(b" ")
    if len(header) != 3 or header[0] != b"SLP":
        raise SlpFormatError("malformed header, expected 'SLP <n> <root>'", 1)
    n = _parse_uint(header[1], "rule count", 1)
    root = _parse_uint(header[2], "root index", 1)
    if n < 1:
        raise SlpFormatError("rule count must be positive", 1)
    if not 1 <= root <= n:
        raise SlpFormatError(f"root {root} out of range 1..{n}", 1)
    if len(lines) - 1 != n:
        raise SlpFormatError(f"expected {n} rules, found {len(lines) - 1}", min(len(lines), n + 1) + 1)

    rules: List[Rule] = []
    lengths = [0]
    for index, raw in enumerate(lines[1:], start=1):
        line = index + 1
        fields = raw.split(b" ")
        if _parse_uint(fields[0], "variable index", line) != index:
            raise SlpFormatError(f"expected variable {index}", line)
        kind = fields[1] if len(fields) > 1 else b""
        if kind == b"T" and len(fields) == 3:
            symbol = _parse_uint(fields[2], "byte value", line)
            if symbol > 0xFF:
                raise SlpFormatError(f"byte value {symbol} exceeds 255", line)
            rules.append(Terminal(symbol))
            lengths.append(1)
        elif kind == b"P" and len(fields) == 4:
            left = _parse_uint(fields[2], "variable index", line)
            right = _parse_uint(fields[3], "variable index", line)
            for child in (left, right):
                if child >= index:
                    raise SlpFormatError(f"forward reference to variable {child}", line)
                if child < 1:
                    raise SlpFormatError(f"index {child} out of range 1..{n}", line)
            length = lengths[left] + lengths[right]
            if length >= LENGTH_CAP:
                raise SlpFormatError("derived length reaches 2**62", line)
            rules.append(Pair(left, right))
            lengths.append(length)
        else:
            raise SlpFormatError("malformed rule, expected '<i> T <byte>' or '<i> P <l> <r>'", line)

    slp = Slp(tuple(rules), root)
    warn_unreachable(slp)
    return slp


def serialize_slp(slp: Slp) -> bytes:
    """Render ``slp`` in canonical text form."""
    out = [f"SLP {slp.n} {slp.root}\n"]
    for index, rule in enumerate(slp.rules, start=1):
        if isinstance(rule, Terminal):
            if rule.symbol > 0xFF:
                raise SlpValidationError(f"variable {index}: sentinel symbols cannot be serialized")
            out.append(f"{index} T {rule.symbol}\n")
        else:
            out.append(f"{index} P {rule.left} {rule.right}\n")
    return "".join(out).encode("ascii")


def reachable_variables(slp: Slp) -> Set[int]:
    """Variables reachable from the root, root included."""
    seen = {slp.root}
    stack = [slp.root]
    while stack:
        rule = slp.rule(stack.pop())
        if isinstance(rule, Pair):
            for child in (rule.left, rule.right):
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
    return seen


def warn_unreachable(slp: Slp) -> int:
    dead = slp.n - len(reachable_variables(slp))
    if dead:
        logger.warning(f"{dead} of {slp.n} variables are unreachable from root {slp.root}")
    return dead


def reverse_slp(slp: Slp) -> Slp:
    """The grammar deriving the reversal of every variable."""
    rules = tuple(Pair(rule.right, rule.left) if isinstance(rule, Pair) else rule for rule in slp.rules)
    return Slp(rules, slp.root)


def expand_variable(slp: Slp, index: int, limit: int) -> Symbols:
    """
    Derive ``val(X_index)`` with an explicit stack.

    Raises:
        LimitExceededError: when the derived length is above ``limit``.
    """
    length = slp.length(index)
    if length > limit:
        raise LimitExceededError(length, limit)
    out: List[int] = []
    stack = [index]
    while stack:
        rule = slp.rule(stack.pop())
        if isinstance(rule, Terminal):
            out.append(rule.symbol)
        else:
            stack.append(rule.right)
            stack.append(rule.left)
    return tuple(out)


def expand(slp: Slp, limit: int) -> Symbols:
    """Derive the whole text, refusing texts longer than ``limit``."""
    return expand_variable(slp, slp.root, limit)


def _append_pair(rules: List[Rule], left: int, right: int) -> int:
    rules.append(Pair(left, right))
    return len(rules)


def _append_run(rules: List[Rule], symbol: int, count: int) -> int:
    """Append rules deriving ``symbol * count`` by repeated doubling."""
    rules.append(Terminal(symbol))
    power = len(rules)
    run: Optional[int] = None
    while True:
        if count & 1:
            run = power if run is None else _append_pair(rules, run, power)
        count >>= 1
        if not count:
            break
        power = _append_pair(rules, power, power)
    assert run is not None
    return run


def augment_with_sentinels(slp: Slp, q: int) -> Slp:
    """
    Wrap the text as ``#^(q-1) T $^(q-1)``.

    The original variables keep their indices; the sentinel runs and the
    two joining rules are appended, the last of them being the new root.
    """
    if q < 2:
        raise ValueError(f"sentinel augmentation needs q >= 2, got {q}")
    if any(isinstance(rule, Terminal) and rule.symbol in SENTINELS for rule in slp.rules):
        raise SlpValidationError("grammar already contains sentinel symbols")
    rules = list(slp.rules)
    begin = _append_run(rules, SENTINEL_BEGIN, q - 1)
    end = _append_run(rules, SENTINEL_END, q - 1)
    opened = _append_pair(rules, begin, slp.root)
    root = _append_pair(rules, opened, end)
    return Slp(tuple(rules), root)


@dataclass(frozen=True)
class VarMeta:
    """Per-variable derived data: ``|X_i|``, ``vOcc(X_i)`` and bounded context."""

    length: int
    vocc: int
    pre: Symbols
    suf: Symbols


def context_width(q: int) -> int:
    """Width of the stored prefix/suffix context for gram length ``q``."""
    return max(1, 3 * (q - 1))


@dataclass(frozen=True)
class MetaTable:
    """
    Metadata of every variable plus the grammar shape the DP walks.

    ``lefts``/``rights`` are 0 for terminals. ``mirrored()`` describes the
    grammar deriving the reversal of every variable; the left-hand DP tables
    are the right-hand tables of the mirror.
    """

    q: int
    kappa: int
    root: int
    lefts: Tuple[int, ...]
    rights: Tuple[int, ...]
    metas: Tuple[VarMeta, ...]
    is_mirror: bool = field(default=False)

    @property
    def n(self) -> int:
        return len(self.metas)

    def __getitem__(self, index: int) -> VarMeta:
        return self.metas[index - 1]

    def length(self, index: int) -> int:
        return self.metas[index - 1].length

    def is_pair(self, index: int) -> bool:
        return self.lefts[index - 1] != 0

    def children(self, index: int) -> Tuple[int, int]:
        left = self.lefts[index - 1]
        if not left:
            raise ValueError(f"variable {index} is a terminal")
        return left, self.rights[index - 1]

    def variables(self) -> Iterable[int]:
        return range(1, self.n + 1)

    @cached_property
    def _mirror(self) -> "MetaTable":
        metas = tuple(VarMeta(m.length, m.vocc, m.suf[::-1], m.pre[::-1]) for m in self.metas)
        return MetaTable(self.q, self.kappa, self.root, self.rights, self.lefts, metas, not self.is_mirror)

    def mirrored(self) -> "MetaTable":
        return self._mirror


def compute_meta(slp: Slp, q: int) -> MetaTable:
    """
    Compute lengths, vOcc and prefix/suffix context of width 3(q-1).

    Args:
        slp: A valid grammar.
        q: Gram length, at least 1.

    Returns:
        The metadata table, one entry per variable.
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    kappa = context_width(q)
    lengths = slp.lengths

    vocc = [0] * (slp.n + 1)
    vocc[slp.root] = 1
    for index in range(slp.root, 0, -1):
        rule = slp.rule(index)
        if isinstance(rule, Pair) and vocc[index]:
            vocc[rule.left] += vocc[index]
            vocc[rule.right] += vocc[index]

    lefts: List[int] = []
    rights: List[int] = []
    pres: List[Symbols] = [()]
    sufs: List[Symbols] = [()]
    for rule in slp.rules:
        if isinstance(rule, Terminal):
            lefts.append(0)
            rights.append(0)
            pres.append((rule.symbol,))
            sufs.append((rule.symbol,))
            continue
        left, right = rule.left, rule.right
        lefts.append(left)
        rights.append(right)
        pre = pres[left]
        if len(pre) < kappa:
            pre = (pre + pres[right])[:kappa]
        suf = sufs[right]
        if len(suf) < kappa:
            suf = (sufs[left] + suf)[-kappa:]
        pres.append(pre)
        sufs.append(suf)

    metas = tuple(
        VarMeta(lengths[index], vocc[index], pres[index], sufs[index]) for index in range(1, slp.n + 1)
    )
    return MetaTable(q, kappa, slp.root, tuple(lefts), tuple(rights), metas)


def boundary_window(meta: MetaTable, index: int, width: int) -> Tuple[Symbols, int]:
    """
    The context around the seam of a pair rule.

    Returns ``suf(X_l, width) + pre(X_r, width)`` together with the number
    of symbols taken from the left child. Position ``p`` of ``X_index`` sits
    at window position ``boundary_offset - |X_l| + p``.
    """
    if not meta.is_pair(index):
        raise ValueError(f"variable {index} is a terminal and has no boundary")
    if not 1 <= width <= meta.kappa:
        raise ValueError(f"window width {width} outside 1..{meta.kappa}")
    left, right = meta.children(index)
    suf = meta[left].suf[-width:]
    pre = meta[right].pre[:width]
    return suf + pre, len(suf)
