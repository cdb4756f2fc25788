"""Envelope words, the envelope of a factor, and checks of envelope extension.

Within one sequence envelopes are ordered
``(1, m) < (2, m) < (1, m + 1)``; the envelope of a factor is the least
envelope word containing it. For Theta1 and Theta2 the same order is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import factors as fx
from .errors import InvalidIndex, MalformedWord, NotAFactor
from .words import TAU1, TAU2, Seq, apply_morphism, block, delta, text

# search for an envelope stops once envelopes are this many times longer than the word
ENVELOPE_SEARCH_FACTOR = 8


@dataclass(frozen=True)
class EnvelopeId:
    seq: Seq
    type: int
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", Seq.parse(self.seq))
        if self.type not in (1, 2):
            raise InvalidIndex(f"envelope type must be 1 or 2, got {self.type}")
        if self.m < 1:
            raise InvalidIndex(f"envelope index must be >= 1, got {self.m}")

    @property
    def rank(self) -> tuple[int, int]:
        return (self.m, self.type)

    def __lt__(self, other: "EnvelopeId") -> bool:
        if self.seq is not other.seq:
            return NotImplemented
        return self.rank < other.rank

    @property
    def word(self) -> str:
        return envelope_word(self)

    def __str__(self) -> str:
        lead = {Seq.D: "", Seq.THETA1: "1", Seq.THETA2: "2"}[self.seq]
        return f"{lead}E_{self.m}^{self.type}"


@dataclass(frozen=True)
class EnvelopeFit:
    word: str
    env: EnvelopeId
    offset: int

    @property
    def envelope(self) -> str:
        return envelope_word(self.env)


def _d_envelope(t: int, m: int) -> str:
    if t == 1:
        return block("A", m)[:-1]
    return (block("B", m) + block("B", m - 1))[:-1]


@lru_cache(maxsize=None)
def envelope_word(env: EnvelopeId) -> str:
    t, m = env.type, env.m
    if env.seq is Seq.D:
        return _d_envelope(t, m)
    if env.seq is Seq.THETA1:
        if t == 1:
            return apply_morphism(TAU1, _d_envelope(1, m))
        return "b" if m == 1 else apply_morphism(TAU1, _d_envelope(2, m - 1))
    if m == 1:
        return "a" if t == 1 else "aca"
    return apply_morphism(TAU2, _d_envelope(t, m - 1)) + "a"


def envelope_ids(seq: "Seq | str") -> Iterator[EnvelopeId]:
    """All envelope ids of ``seq`` in increasing order (infinite)."""
    seq = Seq.parse(seq)
    m = 1
    while True:
        yield EnvelopeId(seq, 1, m)
        yield EnvelopeId(seq, 2, m)
        m += 1


def envelope_of(seq: "Seq | str", w: str) -> EnvelopeFit:
    """The least envelope containing ``w`` and the offset of ``w`` inside it."""
    seq = Seq.parse(seq)
    fx.check_word(seq, w)
    return _envelope_of(seq, w)


@lru_cache(maxsize=16384)
def _envelope_of(seq: Seq, w: str) -> EnvelopeFit:
    bound = ENVELOPE_SEARCH_FACTOR * len(w)
    for env in envelope_ids(seq):
        e = envelope_word(env)
        i = e.find(w)
        if i >= 0:
            return EnvelopeFit(w, env, i)
        if env.type == 2 and min(len(e), len(envelope_word(EnvelopeId(seq, 1, env.m)))) > bound:
            raise NotAFactor(w, seq.value, bound)
    raise AssertionError("unreachable")


def verify_unique_occurrence(seq: "Seq | str", w: str) -> bool:
    """True iff ``w`` occurs exactly once in its envelope."""
    fit = envelope_of(seq, w)
    return fx.count_in(fit.envelope, w) == 1


def verify_strong_extension(seq: "Seq | str", w: str, count: int) -> bool:
    """True iff each of the first ``count`` occurrences of ``w`` sits inside an
    occurrence of its envelope, always at the same offset."""
    seq = Seq.parse(seq)
    fit = envelope_of(seq, w)
    env = fit.envelope
    ws = fx.occurrences(seq, w, count).positions
    es = fx.occurrences(seq, env, count).positions
    if any(p - q != fit.offset for p, q in zip(ws, es)):
        return False
    t = text(seq, ws[-1] + len(env))
    return all(t[p - 1 - fit.offset : p - 1 - fit.offset + len(env)] == env for p in ws)


def decompose(t: int, m: int, n: int) -> tuple[int, str]:
    """Split ``E_m^t`` (of D) into copies of ``E_n^1`` joined by single letters.

    Returns the number of copies and the word formed by the separator letters.
    """
    if t not in (1, 2) or not m > n >= 1:
        raise InvalidIndex(f"decompose needs t in {{1, 2}} and m > n >= 1, got t={t}, m={m}, n={n}")
    e = _d_envelope(t, m)
    unit = _d_envelope(1, n)
    stride = len(unit) + 1
    if (len(e) + 1) % stride:
        raise AssertionError(f"E_{m}^{t} is not a whole number of E_{n}^1 blocks")
    copies = (len(e) + 1) // stride
    for k in range(copies):
        if e[k * stride : k * stride + len(unit)] != unit:
            raise AssertionError(f"copy {k} of E_{n}^1 missing from E_{m}^{t}")
    seps = "".join(e[k * stride - 1] for k in range(1, copies))
    return copies, seps


def palindromic_prefixes(env: EnvelopeId) -> list[str]:
    """Nonempty palindromic proper prefixes of a D envelope word, shortest first."""
    if env.seq is not Seq.D:
        raise InvalidIndex("palindromic_prefixes is defined for envelopes of D only")
    e = envelope_word(env)
    return [e[:k] for k in range(1, len(e)) if fx.is_palindrome(e[:k])]


def middle_letter(w: str) -> str:
    if len(w) % 2 == 0:
        raise MalformedWord(f"{w!r} has even length and no middle letter")
    return w[len(w) // 2]


def recursion_holds(m: int) -> bool:
    """``E_{m+1}^1 = E_m^1 d_m E_m^1`` and ``E_{m+1}^2 = E_m^1 d_m E_m^1 d_m E_m^1``."""
    e, d = _d_envelope(1, m), delta(m)
    return _d_envelope(1, m + 1) == e + d + e and _d_envelope(2, m + 1) == e + d + e + d + e
