"""Acceptance criteria, one test per criterion, each at its stated tolerance.

A PASS/FAIL line per criterion is printed in the pytest terminal summary.
Run directly with ``python tests/test_acceptance.py`` or ``pytest tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from conftest import naive_d, naive_positions, naive_seq, naive_square_scan, record_criterion
from pdseq import factors as fx
from pdseq.envelope import EnvelopeId, envelope_of, envelope_word, verify_strong_extension, verify_unique_occurrence
from pdseq.reference import BLOCKS_TABLE, CORRECTIONS, ENVELOPE_TABLE, PRINTED_PAIR_LENGTHS, RETURN_TABLE
from pdseq.returns import classify, envelope_first_positions, envelope_return_words, transported_return_words
from pdseq.spectrum import (
    consecutive_pair_lengths,
    expected_pair_lengths,
    far_pairs_separated,
    relations_brute,
    spectrum,
    squares,
)
from pdseq.words import SIGMA, Seq, apply_morphism, block, prefix


@contextmanager
def criterion(label: str, budget: float | None = None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        seconds = time.perf_counter() - start
        if budget is not None and seconds >= budget:
            ok = False
        record_criterion(label, ok, seconds)
    assert seconds < (budget if budget is not None else float("inf")), f"{label}: {seconds:.2f}s over budget"


def _row_word(row: str, m: int) -> str:
    if row in ("A", "B"):
        return block(row, m)
    return envelope_word(EnvelopeId(Seq.D, int(row[1]), m))


def test_1_fixed_point():
    with criterion("1 fixed point, n = 2^k, k <= 16", budget=1.0):
        for k in range(17):
            n = 2**k
            w = prefix(Seq.D, n)
            img = apply_morphism(SIGMA, w)
            assert img[:n] == w
            assert img == prefix(Seq.D, 2 * n)
        assert prefix(Seq.D, 1 << 17) == naive_d(1 << 17)


def test_2_golden_tables():
    with criterion("2 blocks and envelope tables, m <= 4 (documented corrections applied)"):
        for (row, m), printed in BLOCKS_TABLE.items():
            if (row, m) == ("E2", 4):
                continue
            assert _row_word(row, m) == printed, (row, m)
        assert _row_word("E2", 4) == "abaaabababaaabababaaaba"
        assert len(BLOCKS_TABLE[("E2", 4)]) == 21
        for (s, t, m), printed in ENVELOPE_TABLE.items():
            got = envelope_word(EnvelopeId(Seq(s), t, m))
            if (s, t, m) == ("Theta1", 1, 4):
                assert got == "abbaaabbabbabbaaabba" and "bbb" in printed
                continue
            assert got == printed, (s, t, m)
        assert ENVELOPE_TABLE[("D", 2, 4)] == "abaaabababaaabababaaaba"
        assert {"blocks E2 m=4", "envelopes Theta1 type 1 m=4"} <= set(CORRECTIONS)


@pytest.mark.xfail(strict=True, reason="the printed Theta1 type-1 envelope at m=4 contains 'bbb', not a factor of Theta1")
def test_2_literal_envelope_table():
    with criterion("2 literal: every printed envelope cell bit-exact"):
        for (s, t, m), printed in ENVELOPE_TABLE.items():
            assert envelope_word(EnvelopeId(Seq(s), t, m)) == printed, (s, t, m)


def test_3_block_occurs_twice():
    with criterion("3 A_m occurs exactly twice in A_mA_m and A_mB_mA_m, m <= 12", budget=1.0):
        for m in range(13):
            a, b = block("A", m), block("B", m)
            assert fx.count_in(a + a, a) == 2
            assert fx.count_in(a + b + a, a) == 2
            if m <= 9:
                assert len(naive_positions(a + a, a)) == 2
                assert len(naive_positions(a + b + a, a)) == 2


def test_4_type1_returns():
    with criterion("4 returns of E_m^1 spell Theta1[1..512], m <= 10"):
        theta = naive_seq("Theta1", 512)
        for m in range(1, 11):
            e = envelope_word(EnvelopeId(Seq.D, 1, m))
            images = {"a": block("A", m), "b": block("A", m - 1)}
            rw = fx.return_words(Seq.D, e, 512)
            assert rw.r0 == ""
            mismatches = sum(r != images[x] for r, x in zip(rw.returns, theta))
            assert mismatches == 0 and len(rw.returns) == 512


def test_5_type2_returns():
    with criterion("5 returns of E_m^2 spell Theta2[1..256], r0 = A_m, first five positions, m <= 8"):
        theta = naive_seq("Theta2", 256)
        for m in range(1, 9):
            e = envelope_word(EnvelopeId(Seq.D, 2, m))
            A, B = (lambda k: block("A", k)), (lambda k: block("B", k))
            images = {"a": A(m - 1), "b": A(m - 1) + A(m) + B(m + 1), "c": B(m) + B(m - 1)}
            rw = fx.return_words(Seq.D, e, 256)
            assert rw.r0 == A(m)
            assert sum(r != images[x] for r, x in zip(rw.returns, theta)) == 0 and len(rw.returns) == 256
            first = [2**m + 1, 3 * 2 ** (m - 1) + 1, 5 * 2**m + 1, 11 * 2 ** (m - 1) + 1, 7 * 2**m + 1]
            assert list(fx.occurrences(Seq.D, e, 5).positions) == first
            assert envelope_first_positions(EnvelopeId(Seq.D, 2, m)) == first
            assert naive_positions(naive_seq("D", 16 * 2**m), e)[:5] == first


def test_6_envelope_extension():
    with criterion("6 unique in envelope and constant offset over 50 occurrences, |w| <= 64", budget=30.0):
        words = fx.factors(Seq.D, 64, 1 << 16)
        assert len(words) == 3291
        bad = []
        for w in words:
            fit = envelope_of(Seq.D, w)
            ws = fx.occurrences(Seq.D, w, 50).positions
            es = fx.occurrences(Seq.D, fit.envelope, 50).positions
            offsets = {p - q for p, q in zip(ws, es)}
            if not verify_unique_occurrence(Seq.D, w) or offsets != {fit.offset}:
                bad.append(w)
            elif fit.envelope[fit.offset : fit.offset + len(w)] != w:
                bad.append(w)
        assert bad == []
        # the cheap strong-extension helper agrees on a sample
        assert all(verify_strong_extension(Seq.D, w, 50) for w in words[::97])


def test_7_classification():
    with criterion("7 classify every factor of D with |w| <= 32 on >= 128 tokens"):
        words = fx.factors(Seq.D, 32)
        assert len(words) == 835
        for w in words:
            c = classify(Seq.D, w, 128)
            assert c.verified_tokens >= 128
            assert (c.kind is Seq.THETA1) == (c.fit.env.type == 1)


def _transport_agrees(seq: Seq, w: str, tokens: int = 64) -> bool:
    closed = transported_return_words(seq, w)
    found = fx.return_words(seq, w, tokens)
    images = closed.alphabet()
    theta = prefix(closed.kind, tokens)
    return found.r0 == closed.r0 and list(found.returns) == [images[x] for x in theta]


def test_8_reflexivity():
    with criterion("8 return tables bit-exact; Theta1/Theta2 factors |w| <= 32 classify and transport"):
        for (s, w), (kind, r1, r2, r4) in RETURN_TABLE.items():
            c = classify(s, w, 128)
            want = {"a": r1, "b": r2} if r4 is None else {"a": r1, "b": r2, "c": r4}
            assert c.kind.value == kind and c.alphabet == want, (s, w)
        for seq, count in ((Seq.THETA1, 865), (Seq.THETA2, 898)):
            words = fx.factors(seq, 32)
            assert len(words) == count
            for w in words:
                c = classify(seq, w, 128)
                assert c.kind in (Seq.THETA1, Seq.THETA2)
                assert _transport_agrees(seq, w), (seq, w)


def test_9_spectrum():
    with criterion("9 spectrum closed = brute (|w| <= 64, p <= 500); far pairs; pair lengths m <= 8 (corrected type 1)"):
        for w in fx.factors(Seq.D, 64, 1 << 16):
            assert [v.relation for v in spectrum(w, 1, 500)] == relations_brute(Seq.D, w, 500), w
        rng = random.Random(0)
        t = prefix(Seq.D, 1 << 14)
        for _ in range(200):
            n = rng.randrange(1, 65)
            i = rng.randrange(len(t) - n)
            assert far_pairs_separated(t[i : i + n], 200)
        for m in range(1, 9):
            for tp in (1, 2):
                e = envelope_word(EnvelopeId(Seq.D, tp, m))
                assert consecutive_pair_lengths(Seq.D, e, 200) == expected_pair_lengths(tp, m)
            assert expected_pair_lengths(2, m) == PRINTED_PAIR_LENGTHS[2](m)
            # printed type-1 set differs only in its middle value
            assert expected_pair_lengths(1, m) ^ PRINTED_PAIR_LENGTHS[1](m) == {3 * 2 ** (m - 1), 3 * 2**m}
            r = envelope_return_words(EnvelopeId(Seq.D, 1, m))
            assert len(r.r1) + len(r.r2) == 3 * 2 ** (m - 1)


@pytest.mark.xfail(strict=True, reason="printed type-1 middle pair length 3*2^m contradicts |r1| + |r2| = 3*2^(m-1)")
def test_9_literal_type1_pair_lengths():
    with criterion("9 literal: type-1 pair lengths equal the printed set"):
        for m in range(1, 9):
            e = envelope_word(EnvelopeId(Seq.D, 1, m))
            assert consecutive_pair_lengths(Seq.D, e, 200) == PRINTED_PAIR_LENGTHS[1](m)


def test_10_square_census():
    t = naive_d(4096)
    naive = naive_square_scan(t)
    with criterion("10 squares(4096) equals the naive square scan; ('ab', 5) present", budget=20.0):
        got = squares(4096)
        assert set(got) == naive
        assert len(got) == len(set(got)) == 12750
        assert ("ab", 5) in set(got)


def test_11_whole_suite_budget():
    with criterion("11 verify --suite all under 60 s, exit 0", budget=60.0):
        proc = subprocess.run([sys.executable, "-m", "pdseq", "verify", "--suite", "all"], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stdout[-2000:]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
