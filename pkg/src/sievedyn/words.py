"""Symbol-sequence algebra over the alphabet {R, L, C}.

Words are finite or eventually periodic sequences of the three symbols.
R marks an erased position, L a surviving one, and C the critical point
(it may only terminate a finite word).  The module provides parsing and
canonical formatting, the pointwise "erase" composition of periodic
words, minimal periods, the parity-lexicographic order used throughout
kneading theory, the admissibility test, and the classical renormalizing
star product.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import lcm

R = "R"
L = "L"
C = "C"

_BASE_RANK = {"L": 0, "C": 1, "R": 2}

DEFAULT_HORIZON = 4096


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _primitive_block(block: str) -> str:
    """Shortest block whose repetition equals ``block``."""
    d = (block + block).find(block, 1)
    if 0 < d < len(block):
        return block[:d]
    return block


@dataclass(frozen=True)
class Word:
    """A symbol sequence: ``preperiod`` followed by ``period`` repeated forever.

    An empty period means the word is finite.  Instances are canonical:
    the period is primitive and the preperiod is as short as possible
    (trailing preperiod symbols matching the period tail are absorbed by
    rotation).  Equality of canonical forms is equality of sequences.
    """

    preperiod: str
    period: str = ""

    def __post_init__(self):
        pre, per = self.preperiod, self.period
        for ch in pre + per:
            if ch not in _BASE_RANK:
                raise ValueError(f"invalid symbol {ch!r}")
        if not pre and not per:
            raise ValueError("empty word")
        if per:
            per = _primitive_block(per)
            while pre and pre[-1] == per[-1]:
                per = per[-1] + per[:-1]
                pre = pre[:-1]
            if C in pre or C in per:
                raise ValueError("C cannot appear in an eventually periodic word")
        else:
            if C in pre[:-1]:
                raise ValueError("C is only allowed as the final symbol")
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @property
    def is_finite(self) -> bool:
        return not self.period

    def __len__(self) -> int:
        if not self.is_finite:
            raise TypeError("infinite word has no length")
        return len(self.preperiod)

    def prefix(self, n: int) -> str:
        """First ``n`` symbols; shorter if the word is finite and ends sooner."""
        if n <= len(self.preperiod) or self.is_finite:
            return self.preperiod[:n]
        parts = [self.preperiod]
        have = len(self.preperiod)
        while have < n:
            take = min(len(self.period), n - have)
            parts.append(self.period[:take])
            have += take
        return "".join(parts)

    def symbol_at(self, q: int) -> str:
        if q < 0:
            raise IndexError("negative position")
        if q < len(self.preperiod):
            return self.preperiod[q]
        if self.is_finite:
            raise IndexError("position beyond end of finite word")
        return self.period[(q - len(self.preperiod)) % len(self.period)]

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str) -> Word:
    """Parse word text such as ``RLRRRL``, ``RL(R)^inf`` or ``RLR^3LRC``.

    Grammar: one or more units, each a symbol or a parenthesized symbol
    group, optionally followed by ``^n`` (n >= 2) or ``^inf``; at most one
    ``^inf`` unit, which must come last; C only as the final symbol.
    """
    units = []  # (symbols, count or "inf", unit position, first-symbol position)
    i = 0
    n = len(text)
    if n == 0:
        raise WordSyntaxError("empty word", 0)
    while i < n:
        start = sym_start = i
        ch = text[i]
        if ch == "(":
            j = text.find(")", i + 1)
            if j < 0:
                raise WordSyntaxError("unbalanced parenthesis", i)
            syms = text[i + 1 : j]
            if not syms:
                raise WordSyntaxError("empty group", i)
            for k, s in enumerate(syms):
                if s not in _BASE_RANK:
                    raise WordSyntaxError(f"bad character {s!r}", i + 1 + k)
            sym_start = i + 1
            i = j + 1
        elif ch in _BASE_RANK:
            syms = ch
            i += 1
        else:
            raise WordSyntaxError(f"bad character {ch!r}", i)
        count: int | str = 1
        if i < n and text[i] == "^":
            i += 1
            if text.startswith("inf", i):
                count = "inf"
                i += 3
            else:
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                if j == i:
                    raise WordSyntaxError("expected integer or 'inf' after '^'", i)
                count = int(text[i:j])
                if count < 2:
                    raise WordSyntaxError("exponent must be >= 2", i)
                i = j
        units.append((syms, count, start, sym_start))

    pre_parts = []
    period = ""
    for syms, count, pos, _ in units:
        if period:
            raise WordSyntaxError("'^inf' must be the last unit", pos)
        if count == "inf":
            period = syms
        else:
            pre_parts.append(syms * count)
    pre = "".join(pre_parts)

    if period and C in pre + period:
        bad = (pre + period).index(C)
        raise WordSyntaxError("C cannot appear in an infinite word", _source_pos(units, bad))
    if not period and C in pre[:-1]:
        raise WordSyntaxError("C is only allowed as the final symbol", _source_pos(units, pre.index(C)))
    return Word(pre, period)


def _source_pos(units, flat_index: int) -> int:
    """Map an index in the expanded symbol sequence back to source text."""
    seen = 0
    for syms, count, _, sym_start in units:
        width = len(syms) * (1 if count == "inf" else count)
        if flat_index < seen + width:
            return sym_start + (flat_index - seen) % len(syms)
        seen += width
    return sym_start  # pragma: no cover - defensive


def _compress_runs(syms: str) -> str:
    # runs of five or more are written with an exponent; shorter runs literally
    out = []
    i = 0
    while i < len(syms):
        j = i
        while j < len(syms) and syms[j] == syms[i]:
            j += 1
        run = j - i
        if run >= 5:
            out.append(f"{syms[i]}^{run}")
        else:
            out.append(syms[i] * run)
        i = j
    return "".join(out)


def format_word(w: Word) -> str:
    """Canonical text for ``w``; ``parse_word(format_word(w)) == w``."""
    if w.is_finite:
        return _compress_runs(w.preperiod)
    return f"{_compress_runs(w.preperiod)}({w.period})^inf"


def _require_finite_composable(w: Word, name: str) -> str:
    if not w.is_finite:
        raise ValueError(f"{name} must be a finite word")
    if not w.preperiod:
        raise ValueError(f"{name} is empty")
    if C in w.preperiod:
        raise ValueError(f"{name} contains C")
    return w.preperiod


def dot_compose(a: Word, b: Word) -> Word:
    """Pointwise product of two periodic words over one common period.

    Both operands are read as the basic period of an infinite periodic
    sequence; a position survives (L) only where both operands have L.
    The result has length lcm(|a|, |b|), one period of the product stream.
    """
    sa = _require_finite_composable(a, "left operand")
    sb = _require_finite_composable(b, "right operand")
    n = lcm(len(sa), len(sb))
    la, lb = len(sa), len(sb)
    out = "".join(L if sa[q % la] == L and sb[q % lb] == L else R for q in range(n))
    return Word(out)


def minimal_period(a: Word) -> int:
    """Length of the shortest block whose repetition equals ``a`` repeated."""
    s = _require_finite_composable(a, "word")
    return len(_primitive_block(s))


def _effective_stream(w: Word, horizon: int) -> str:
    """Symbols used in comparisons: finite words end in a terminal C."""
    if w.is_finite:
        syms = w.preperiod
        if not syms.endswith(C):
            syms = syms + C
        return syms[: horizon + 1] if len(syms) > horizon else syms
    return w.prefix(horizon)


def _compare_streams(ea: str, eb: str, horizon: int) -> Ordering:
    n = min(len(ea), len(eb), horizon)
    if ea[:n] == eb[:n]:
        return Ordering.EQUAL
    rparity = 0
    for k in range(n):
        sa, sb = ea[k], eb[k]
        if sa != sb:
            d = _BASE_RANK[sa] - _BASE_RANK[sb]
            if rparity:
                d = -d
            return Ordering.LESS if d < 0 else Ordering.GREATER
        if sa == R:
            rparity ^= 1
    return Ordering.EQUAL  # pragma: no cover - unreachable after slice check


def parity_compare(a: Word, b: Word, horizon: int = DEFAULT_HORIZON) -> Ordering:
    """Parity-lexicographic comparison of the two symbol streams.

    Streams are compared position by position; at the first difference the
    base order L < C < R applies when the number of preceding R symbols is
    even and is reversed when it is odd.  A finite word contributes a
    terminal C at its end.  EQUAL means indistinguishable within
    ``horizon`` positions.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    return _compare_streams(_effective_stream(a, horizon), _effective_stream(b, horizon), horizon)


def shift_word(w: Word, s: int) -> Word:
    """Drop the first ``s`` symbols.  Finite words require ``s < len(w)``."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    if s == 0:
        return w
    if w.is_finite:
        if s >= len(w.preperiod):
            raise ValueError("shift beyond end of finite word")
        return Word(w.preperiod[s:])
    if s <= len(w.preperiod):
        return Word(w.preperiod[s:], w.period)
    r = (s - len(w.preperiod)) % len(w.period)
    return Word("", w.period[r:] + w.period[:r])


def is_admissible(k: Word, horizon: int = DEFAULT_HORIZON) -> bool:
    """Whether every shift of ``k`` is <= ``k`` in parity order.

    This is the realizability criterion for kneading sequences of a
    unimodal map; the word must begin with R.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if k.is_finite:
        stream = _effective_stream(k, horizon)
        limit = min(horizon, len(stream) - 1)
    else:
        stream = k.prefix(2 * horizon)
        limit = horizon
    if stream[0] != R:
        raise ValueError("kneading words must begin with R")
    target = stream[:horizon]
    for s in range(1, limit + 1):
        if _compare_streams(stream[s : s + horizon], target, horizon) is Ordering.GREATER:
            return False
    return True


def star_compose(p: Word, q: Word) -> Word:
    """Renormalizing star product; ``p`` must be finite and end in C.

    Every symbol of ``q`` is replaced by the body of ``p`` (the symbols
    before C) followed by that symbol, with R and L swapped when the body
    contains an odd number of R's.  C is never swapped.
    """
    if not p.is_finite or not p.preperiod.endswith(C):
        raise ValueError("left operand must be a finite word ending in C")
    body = p.preperiod[:-1]
    flip = body.count(R) % 2 == 1

    def block(ch: str) -> str:
        if flip and ch != C:
            ch = L if ch == R else R
        return body + ch

    pre = "".join(block(ch) for ch in q.preperiod)
    per = "".join(block(ch) for ch in q.period)
    return Word(pre, per)


def star_power(p: Word, k: int) -> Word:
    """k-fold star product of ``p`` with itself (k >= 1)."""
    if k < 1:
        raise ValueError("power must be >= 1")
    w = p
    for _ in range(k - 1):
        w = star_compose(w, p)
    return w
