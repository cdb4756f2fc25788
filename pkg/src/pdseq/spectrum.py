"""Separated / adjacent / overlapped spectrum of consecutive occurrences in D, and squares.

``(w, p)`` is separated, adjacent or overlapped as the gap between the p-th
and (p+1)-th occurrence of ``w`` is larger than, equal to, or smaller than
``|w|``. The closed form needs only the envelope of ``w`` and one letter of
Theta1 or Theta2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import factors as fx
from .envelope import EnvelopeId, envelope_of, envelope_word
from .returns import envelope_return_words
from .words import Seq, prefix, text

# spectrum formulas for envelopes with m <= this are cross-checked, not trusted
SMALL_M = 2


class Relation(str, enum.Enum):
    SEPARATED = "separated"
    ADJACENT = "adjacent"
    OVERLAPPED = "overlapped"

    @property
    def property_name(self) -> str:
        return {"separated": "P1", "adjacent": "P2", "overlapped": "P3"}[self.value]


class Source(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    BRUTE_FORCE = "brute_force"


@dataclass(frozen=True)
class SpectrumVerdict:
    word: str
    p: int
    relation: Relation
    theta_letter: str | None
    source: Source


def relation_of_gap(gap: int, length: int) -> Relation:
    if gap > length:
        return Relation.SEPARATED
    if gap == length:
        return Relation.ADJACENT
    return Relation.OVERLAPPED


def relations_brute(seq: "Seq | str", w: str, p_max: int) -> list[Relation]:
    """Relations of ``(w, 1) .. (w, p_max)`` straight from occurrence positions."""
    pos = fx.occurrences(seq, w, p_max + 1).positions
    return [relation_of_gap(q - p, len(w)) for p, q in zip(pos, pos[1:])]


def relation_brute(seq: "Seq | str", w: str, p: int) -> SpectrumVerdict:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    rel = relations_brute(seq, w, p)[p - 1]
    return SpectrumVerdict(w, p, rel, None, Source.BRUTE_FORCE)


def closed_form_relation(env_type: int, m: int, length: int, theta_letter: str) -> Relation:
    """The printed spectrum formulas, as a pure function of envelope type, index, |w| and the Theta letter."""
    if env_type == 1:
        if theta_letter == "a":
            return Relation.SEPARATED
        half = 2 ** (m - 1)
        if length < half:
            return Relation.SEPARATED
        return Relation.ADJACENT if length == half else Relation.OVERLAPPED
    return Relation.OVERLAPPED if theta_letter == "a" else Relation.SEPARATED


def _theta_for(env_type: int) -> Seq:
    return Seq.THETA1 if env_type == 1 else Seq.THETA2


def spectrum(w: str, p_from: int, p_to: int) -> list[SpectrumVerdict]:
    """Closed-form verdicts for ``p_from <= p <= p_to`` (factors of D only).

    Envelopes with ``m <= 2`` fall outside the length bounds the formulas rest
    on, so those words are answered by brute force instead.
    """
    if not 1 <= p_from <= p_to:
        raise ValueError(f"need 1 <= p_from <= p_to, got {p_from}..{p_to}")
    fit = envelope_of(Seq.D, w)
    letters = text(_theta_for(fit.env.type), p_to)
    if fit.env.m <= SMALL_M:
        rels = relations_brute(Seq.D, w, p_to)
        return [
            SpectrumVerdict(w, p, rels[p - 1], letters[p - 1], Source.BRUTE_FORCE) for p in range(p_from, p_to + 1)
        ]
    return [
        SpectrumVerdict(
            w, p, closed_form_relation(fit.env.type, fit.env.m, len(w), letters[p - 1]), letters[p - 1], Source.CLOSED_FORM
        )
        for p in range(p_from, p_to + 1)
    ]


def relation_closed(w: str, p: int) -> SpectrumVerdict:
    return spectrum(w, p, p)[0]


def far_pairs_separated(w: str, p_max: int) -> bool:
    """True iff occurrences p < q <= p_max with ``q - p >= 2`` never touch or overlap.

    Positions increase, so it is enough to check ``q = p + 2``.
    """
    pos = fx.occurrences(Seq.D, w, p_max).positions
    return all(c - a > len(w) for a, c in zip(pos, pos[2:]))


def consecutive_pair_lengths(seq: "Seq | str", w: str, p_max: int) -> set[int]:
    """``{|r_p r_{p+1}| : 1 <= p <= p_max}`` from brute-force positions."""
    pos = fx.occurrences(seq, w, p_max + 2).positions
    return {c - a for a, c in zip(pos, pos[2:])}


def expected_pair_lengths(env_type: int, m: int) -> set[int]:
    """Pair lengths implied by the closed-form return word lengths of ``E_m^type``.

    Type 1: ``{2^(m+1), 3*2^(m-1), 2^m}``. Type 2: ``{2^(m+2), 2^(m+1)}``.
    """
    r = envelope_return_words(EnvelopeId(Seq.D, env_type, m))
    if env_type == 1:
        a, b = len(r.r1), len(r.r2)
        return {a + a, a + b, b + b}
    a, b, c = len(r.r1), len(r.r2), len(r.r4)
    return {a + b, a + c}


def squares(n: int) -> list[tuple[str, int]]:
    """Every square ``ww`` lying inside ``prefix(D, n)``, as ``(w, position)``.

    Uses the closed form: ``ww`` occurs exactly when ``w`` has envelope
    ``E_m^1`` with ``|w| = 2^(m-1)`` and the p-th return is a ``b`` of
    Theta1; occurrences of the envelope are accumulated from Theta1 letters.
    """
    if n < 1:
        raise ValueError(f"horizon must be >= 1, got {n}")
    out: list[tuple[str, int]] = []
    # each return word has length >= 1, so n letters of Theta1 always suffice
    theta = text(Seq.THETA1, n)
    m = 1
    while 2**m <= n:
        half = 2 ** (m - 1)
        last = n - 2 * half + 1
        env = EnvelopeId(Seq.D, 1, m)
        e = envelope_word(env)
        r = envelope_return_words(env)
        step = {"a": len(r.r1), "b": len(r.r2)}
        for i in range(len(e) - half + 1):
            w = e[i : i + half]
            if envelope_of(Seq.D, w).env != env:
                continue
            p, q = 1, 1 + len(r.r0) + i
            while q <= last:
                x = theta[p - 1]
                if x == "b":
                    out.append((w, q))
                q += step[x]
                p += 1
        m += 1
    return sorted(out, key=lambda wq: (wq[1], len(wq[0])))


def repetitions_brute(n: int, k: int, seq: "Seq | str" = Seq.D) -> list[tuple[str, int]]:
    """All ``w^k`` (k >= 2) inside ``prefix(seq, n)`` by scanning every period.

    For each period L a run of ``(k-1)L`` consecutive positions with
    ``t[i] == t[i+L]`` marks a k-th power. Quadratic in ``n``.
    """
    t = prefix(seq, n)
    arr = np.frombuffer(t.encode("ascii"), dtype=np.uint8)
    out: list[tuple[str, int]] = []
    for L in range(1, n // k + 1):
        need = (k - 1) * L
        eq = (arr[:-L] == arr[L:]).astype(np.int32)
        csum = np.concatenate(([0], np.cumsum(eq)))
        # start i needs eq[i : i + need] all true and i + k*L <= n
        starts = np.arange(0, n - k * L + 1)
        hits = starts[(csum[starts + need] - csum[starts]) == need]
        out.extend((t[i : i + L], int(i) + 1) for i in hits)
    return sorted(out, key=lambda wq: (wq[1], len(wq[0])))


def squares_brute(n: int) -> list[tuple[str, int]]:
    return repetitions_brute(n, 2)


def cubes_brute(n: int) -> list[tuple[str, int]]:
    return repetitions_brute(n, 3)
