import pytest
from hypothesis import given, settings, strategies as st

from conftest import naive_d, naive_positions, naive_seq, rewrite
from pdseq.envelope import (
    EnvelopeId,
    decompose,
    envelope_ids,
    envelope_of,
    envelope_word,
    middle_letter,
    palindromic_prefixes,
    recursion_holds,
    verify_strong_extension,
    verify_unique_occurrence,
)
from pdseq.errors import InvalidIndex, MalformedWord, NotAFactor
from pdseq.factors import factors, is_palindrome
from pdseq.words import Seq


def naive_envelope(t: int, m: int) -> str:
    # A_m and B_m read straight off D: A_m = D[1..2^m], B_m differs only in the last letter
    a = naive_d(2**m)
    if t == 1:
        return a[:-1]
    b_m = a[:-1] + ("b" if a[-1] == "a" else "a")
    a_prev = naive_d(2 ** (m - 1))
    b_prev = a_prev[:-1] + ("b" if a_prev[-1] == "a" else "a")
    return (b_m + b_prev)[:-1]


@pytest.mark.parametrize("t", [1, 2])
@pytest.mark.parametrize("m", range(1, 12))
def test_d_envelopes_against_naive(t, m):
    e = envelope_word(EnvelopeId(Seq.D, t, m))
    assert e == naive_envelope(t, m)
    assert is_palindrome(e)


@pytest.mark.parametrize("m", range(2, 10))
def test_theta_envelopes_are_images(m):
    assert envelope_word(EnvelopeId(Seq.THETA1, 1, m)) == rewrite({"a": "a", "b": "bb"}, naive_envelope(1, m))
    assert envelope_word(EnvelopeId(Seq.THETA1, 2, m)) == rewrite({"a": "a", "b": "bb"}, naive_envelope(2, m - 1))
    for t in (1, 2):
        assert envelope_word(EnvelopeId(Seq.THETA2, t, m)) == rewrite(
            {"a": "ab", "b": "acac"}, naive_envelope(t, m - 1)
        ) + "a"


@pytest.mark.parametrize(
    "seq, w, t, m, offset",
    [
        (Seq.D, "b", 1, 2, 1),
        (Seq.D, "a", 1, 1, 0),
        (Seq.D, "aa", 2, 1, 0),
        (Seq.D, "ba", 1, 2, 1),
        (Seq.D, "baaab", 1, 3, 1),
        (Seq.THETA1, "b", 2, 1, 0),
        (Seq.THETA2, "c", 2, 1, 1),
    ],
)
def test_envelope_of_examples(seq, w, t, m, offset):
    fit = envelope_of(seq, w)
    assert (fit.env.type, fit.env.m, fit.offset) == (t, m, offset)
    assert fit.envelope[offset : offset + len(w)] == w


def test_envelope_of_rejects_non_factors():
    with pytest.raises(NotAFactor):
        envelope_of(Seq.D, "bb")
    with pytest.raises(NotAFactor):
        envelope_of(Seq.D, "aaaa")
    with pytest.raises(MalformedWord):
        envelope_of(Seq.D, "")


def test_envelope_order():
    ids = []
    gen = envelope_ids(Seq.D)
    for _ in range(6):
        ids.append(next(gen))
    assert [(e.type, e.m) for e in ids] == [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (2, 3)]
    assert ids == sorted(ids)
    assert str(EnvelopeId(Seq.THETA1, 1, 4)) == "1E_4^1"


@pytest.mark.parametrize("t, m", [(0, 1), (3, 1), (1, 0)])
def test_envelope_id_validation(t, m):
    with pytest.raises(InvalidIndex):
        EnvelopeId(Seq.D, t, m)


def test_envelope_is_least_by_naive_search():
    t = naive_seq("D", 1 << 12)
    words = {t[i : i + n] for n in range(1, 17) for i in range(len(t) - n)}
    order = [(tp, m) for m in range(1, 10) for tp in (1, 2)]
    for w in words:
        least = next((tp, m) for tp, m in order if w in naive_envelope(tp, m))
        fit = envelope_of(Seq.D, w)
        assert (fit.env.type, fit.env.m) == least
        assert naive_positions(fit.envelope, w) == [fit.offset + 1]


@pytest.mark.parametrize("seq", list(Seq))
def test_unique_and_strong_extension_small(seq):
    for w in factors(seq, 10, 1 << 12):
        assert verify_unique_occurrence(seq, w)
        assert verify_strong_extension(seq, w, 30)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=1 << 14), st.integers(min_value=1, max_value=64))
def test_offset_is_constant_across_occurrences(i, n):
    t = naive_seq("D", (1 << 14) + 64)
    w = t[i : i + n]
    fit = envelope_of(Seq.D, w)
    big = naive_seq("D", 1 << 18)
    ws = naive_positions(big[: 1 << 16], w)[:20]
    es = naive_positions(big[: (1 << 16) + len(fit.envelope)], fit.envelope)[:20]
    assert [p - q for p, q in zip(ws, es)] == [fit.offset] * min(len(ws), len(es))


@pytest.mark.parametrize("m", range(1, 14))
def test_recursion(m):
    assert recursion_holds(m)


@pytest.mark.parametrize(
    "t, m, n, copies, seps",
    [(1, 3, 1, 4, "bab"), (2, 3, 2, 3, "aa"), (1, 4, 2, 4, "aba"), (2, 4, 3, 3, "bb")],
)
def test_decompose(t, m, n, copies, seps):
    assert decompose(t, m, n) == (copies, seps)


def test_decompose_rejects_bad_index():
    with pytest.raises(InvalidIndex):
        decompose(1, 2, 2)


@pytest.mark.parametrize("t, m", [(1, 5), (2, 5), (1, 7)])
def test_palindromic_prefixes_are_lower_envelopes(t, m):
    lower = {naive_envelope(tt, k) for k in range(1, m + 1) for tt in (1, 2)}
    for u in palindromic_prefixes(EnvelopeId(Seq.D, t, m)):
        assert u in lower


def test_palindromic_prefixes_only_for_d():
    with pytest.raises(InvalidIndex):
        palindromic_prefixes(EnvelopeId(Seq.THETA1, 1, 3))


def test_middle_letter():
    assert middle_letter("abaaaba") == "a"
    assert middle_letter("ababa") == "a"
    with pytest.raises(MalformedWord):
        middle_letter("aa")
