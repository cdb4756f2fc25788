"""Exact occurrence search, return-word extraction and small word utilities.

Everything here works on generated prefixes and makes no use of the closed
forms in :mod:`pdseq.envelope` or :mod:`pdseq.returns`; it is the reference
layer those modules are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import MalformedWord, NotAFactor
from .words import Seq, prefix, text

MIN_HORIZON = 64
HORIZON_PER_LETTER = 16
HORIZON_CAP = 1 << 24


@dataclass(frozen=True)
class OccurrenceList:
    word: str
    positions: tuple[int, ...]
    horizon: int


@dataclass(frozen=True)
class ReturnWords:
    word: str
    r0: str
    returns: tuple[str, ...]

    def __getitem__(self, p: int) -> str:
        """``r_p`` for p >= 1; ``r_0`` for p == 0."""
        if p == 0:
            return self.r0
        if p < 0:
            raise IndexError(p)
        return self.returns[p - 1]


def check_word(seq: Seq, w: str) -> None:
    if not w:
        raise MalformedWord("the empty word is not a valid query")
    bad = set(w).difference(seq.alphabet)
    if bad:
        raise MalformedWord(f"letters {''.join(sorted(bad))!r} are not in the alphabet of {seq}")


def start_horizon(w: str) -> int:
    return max(MIN_HORIZON, HORIZON_PER_LETTER * len(w))


def failure_function(w: str) -> list[int]:
    """KMP border table: ``fail[i]`` is the length of the longest proper border of ``w[:i+1]``."""
    fail = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return fail


def kmp_search(t: str, w: str, start: int = 0, end: int | None = None) -> Iterator[int]:
    """Yield 0-based starts of (possibly overlapping) matches of ``w`` inside ``t[start:end]``."""
    if not w:
        raise MalformedWord("the empty word is not a valid pattern")
    end = len(t) if end is None else min(end, len(t))
    fail = failure_function(w)
    k = 0
    for i in range(start, end):
        while k and t[i] != w[k]:
            k = fail[k - 1]
        if t[i] == w[k]:
            k += 1
            if k == len(w):
                yield i - k + 1
                k = fail[k - 1]


def find_all(t: str, w: str, start: int = 0, end: int | None = None, limit: int | None = None) -> list[int]:
    """0-based starts of overlapping matches of ``w`` fully inside ``t[start:end]``."""
    end = len(t) if end is None else end
    out: list[int] = []
    i = t.find(w, start, end)
    while i >= 0:
        out.append(i)
        if limit is not None and len(out) >= limit:
            break
        i = t.find(w, i + 1, end)
    return out


def count_in(t: str, w: str) -> int:
    """Number of (overlapping) occurrences of ``w`` in ``t``."""
    return len(find_all(t, w))


@lru_cache(maxsize=8192)
def _occurrences(seq: Seq, w: str, count: int) -> OccurrenceList:
    horizon = start_horizon(w)
    positions: list[int] = []
    pos = 0
    while True:
        t = text(seq, horizon)
        while len(positions) < count:
            i = t.find(w, pos, horizon)
            if i < 0:
                break
            positions.append(i + 1)
            pos = i + 1
        if len(positions) >= count:
            return OccurrenceList(w, tuple(positions), horizon)
        if not positions:
            raise NotAFactor(w, seq.value, horizon)
        if horizon >= HORIZON_CAP:
            raise NotAFactor(w, seq.value, horizon, exhausted=True)
        horizon = min(2 * horizon, HORIZON_CAP)


def occurrences(seq: "Seq | str", w: str, count: int = 1) -> OccurrenceList:
    """The first ``count`` 1-based positions of ``w`` in ``seq``.

    The scan starts at ``max(64, 16|w|)`` letters and doubles until enough
    occurrences are found. A word absent from the starting horizon is
    reported as :class:`NotAFactor`.
    """
    seq = Seq.parse(seq)
    check_word(seq, w)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return _occurrences(seq, w, count)


def return_words(seq: "Seq | str", w: str, count: int) -> ReturnWords:
    """``r_0`` and the first ``count`` return words of ``w``, read off the prefix."""
    seq = Seq.parse(seq)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    pos = occurrences(seq, w, count + 1).positions
    t = text(seq, pos[-1])
    returns = tuple(t[p - 1 : q - 1] for p, q in zip(pos, pos[1:]))
    return ReturnWords(w, t[: pos[0] - 1], returns)


def factors(seq: "Seq | str", max_len: int, horizon: int = 1 << 16) -> list[str]:
    """All distinct factors of length ``1..max_len`` seen in ``prefix(seq, horizon)``.

    Sorted by length, then lexicographically.
    """
    t = prefix(seq, horizon)
    if max_len < 1 or not t:
        return []
    long_windows = {t[i : i + max_len] for i in range(max(len(t) - max_len + 1, 0))}
    # tails shorter than max_len near the end of the prefix
    long_windows.update(t[i:] for i in range(max(len(t) - max_len + 1, 0), len(t)))
    out: set[str] = set()
    for n in range(1, max_len + 1):
        out.update(u[:n] for u in long_windows if len(u) >= n)
    return sorted(out, key=lambda u: (len(u), u))


def mirror(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


_BAR = str.maketrans("ab", "ba")


def bar(w: str) -> str:
    """Swap a and b letterwise."""
    if set(w).difference("ab"):
        raise MalformedWord(f"bar is defined on {{a, b}} only, got {w!r}")
    return w.translate(_BAR)
