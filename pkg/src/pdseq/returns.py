"""Closed-form return words of envelope words and classification of factors.

The return word sequence of any factor of D, Theta1 or Theta2 is Theta1 or
Theta2 written over two or three return words. Which one is decided by the
type of the factor's envelope; the alphabet comes from the envelope's return
words shifted by the factor's offset.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import factors as fx
from .envelope import EnvelopeFit, EnvelopeId, envelope_of, envelope_word
from .errors import ClassificationMismatch, InvalidIndex
from .words import SIGMA, TAU1, TAU2, Seq, apply_morphism, block, prefix

DEFAULT_TOKENS = 256


@dataclass(frozen=True)
class EnvelopeReturns:
    """``r_0`` plus the distinct return words ``r_1, r_2`` (and ``r_4`` for Theta2-type)."""

    r0: str
    r1: str
    r2: str
    r4: str | None = None

    @property
    def kind(self) -> Seq:
        return Seq.THETA1 if self.r4 is None else Seq.THETA2

    def alphabet(self) -> dict[str, str]:
        out = {"a": self.r1, "b": self.r2}
        if self.r4 is not None:
            out["c"] = self.r4
        return out

    def map(self, f) -> "EnvelopeReturns":
        return EnvelopeReturns(f(self.r0), f(self.r1), f(self.r2), None if self.r4 is None else f(self.r4))


def _require_d(env: EnvelopeId) -> None:
    if env.seq is not Seq.D:
        raise InvalidIndex(f"closed-form positions are stated for envelopes of D, got {env.seq}")


def envelope_first_positions(env: EnvelopeId) -> list[int]:
    """First three (type 1) or five (type 2) occurrence positions of a D envelope."""
    _require_d(env)
    m = env.m
    if env.type == 1:
        return [1, 2**m + 1, 3 * 2 ** (m - 1) + 1]
    return [2**m + 1, 3 * 2 ** (m - 1) + 1, 5 * 2**m + 1, 11 * 2 ** (m - 1) + 1, 7 * 2**m + 1]


def _d_returns(t: int, m: int) -> EnvelopeReturns:
    A, B = (lambda k: block("A", k)), (lambda k: block("B", k))
    if t == 1:
        return EnvelopeReturns("", A(m), A(m - 1))
    return EnvelopeReturns(A(m), A(m - 1), A(m - 1) + A(m) + B(m + 1), B(m) + B(m - 1))


def envelope_return_words(env: EnvelopeId) -> EnvelopeReturns:
    """Closed-form ``r_0, r_1, r_2, r_4`` of an envelope word in its own sequence.

    For D these are blocks ``A_k, B_k``; for Theta1 and Theta2 they are the
    tau-images of the D envelope one level down, with fixed base rows.
    """
    t, m = env.type, env.m
    if env.seq is Seq.D:
        return _d_returns(t, m)
    if env.seq is Seq.THETA1:
        if t == 1:
            return _d_returns(1, m).map(TAU1)
        if m == 1:
            return EnvelopeReturns("a", "b", "baaa", "ba")
        return _d_returns(2, m - 1).map(TAU1)
    if m == 1:
        return EnvelopeReturns("", "ab", "ac") if t == 1 else EnvelopeReturns("ab", "ac", "acababab", "acab")
    return _d_returns(t, m - 1).map(TAU2)


def _shift(r: str, head: str) -> str:
    # return word of the factor: same length as r, read ``len(head)`` letters later
    i = len(head)
    return (r + head)[i : i + len(r)]


def transport(returns: EnvelopeReturns, fit: EnvelopeFit) -> EnvelopeReturns:
    """Move envelope return words to the factor sitting at ``fit.offset`` inside it."""
    head = fit.envelope[: fit.offset]
    return EnvelopeReturns(
        returns.r0 + head,
        _shift(returns.r1, head),
        _shift(returns.r2, head),
        None if returns.r4 is None else _shift(returns.r4, head),
    )


def transported_return_words(seq: "Seq | str", w: str) -> EnvelopeReturns:
    fit = envelope_of(seq, w)
    return transport(envelope_return_words(fit.env), fit)


@dataclass(frozen=True)
class ReturnClassification:
    word: str
    seq: Seq
    kind: Seq
    alphabet: dict[str, str] = field(hash=False)
    r0: str
    verified_tokens: int
    fit: EnvelopeFit

    def spell(self, theta_word: str) -> str:
        """Expand a word over the Theta letters into return words."""
        return "".join(self.alphabet[x] for x in theta_word)


def classify(seq: "Seq | str", w: str, tokens: int = DEFAULT_TOKENS) -> ReturnClassification:
    """Closed-form classification of ``w``'s return word sequence, checked on ``tokens`` returns.

    Raises :class:`ClassificationMismatch` if the first ``tokens`` brute-force
    return words do not spell ``prefix(kind, tokens)`` under the closed-form
    alphabet, or if ``r_0`` disagrees.
    """
    seq = Seq.parse(seq)
    if tokens < 1:
        raise ValueError(f"tokens must be >= 1, got {tokens}")
    fit = envelope_of(seq, w)
    closed = transport(envelope_return_words(fit.env), fit)
    kind = closed.kind
    alphabet = closed.alphabet()
    if len(set(alphabet.values())) != len(alphabet):
        raise ClassificationMismatch(f"{w!r}: return words are not distinct: {alphabet}")
    inverse = {r: x for x, r in alphabet.items()}

    found = fx.return_words(seq, w, tokens)
    if found.r0 != closed.r0:
        raise ClassificationMismatch(f"{w!r}: r0 is {found.r0!r}, closed form gives {closed.r0!r}")
    expected = prefix(kind, tokens)
    for p, (r, x) in enumerate(zip(found.returns, expected), start=1):
        if inverse.get(r) != x:
            raise ClassificationMismatch(
                f"{w!r} in {seq}: r_{p} = {r!r} but {kind}[{p}] = {x!r} maps to {alphabet[x]!r}"
            )
    return ReturnClassification(w, seq, kind, alphabet, closed.r0, tokens, fit)


def expand_over(word: str, images: dict[str, str]) -> str:
    return "".join(images[x] for x in word)


def verify_block_alphabets(m: int, n_max: int) -> bool:
    """Check that sigma^n over the block alphabets reproduces the larger blocks.

    Over ``{a -> A_m, b -> B_m}``: ``sigma^n(a), sigma^n(b)`` become
    ``A_{m+n}, B_{m+n}``. Over ``{a -> r1 r2, b -> r1 r4 r1 r4}`` built from
    the return words of ``E_m^2``: they become ``A_m^-1 A_{m+n+2} A_m`` and
    ``A_m^-1 B_{m+n+2} A_m`` (compared after prepending ``A_m``).
    """
    if m < 1 or n_max < 0:
        raise InvalidIndex(f"need m >= 1 and n_max >= 0, got m={m}, n_max={n_max}")
    A, B = (lambda k: block("A", k)), (lambda k: block("B", k))
    r = _d_returns(2, m)
    first = {"a": A(m), "b": B(m)}
    second = {"a": r.r1 + r.r2, "b": r.r1 + r.r4 + r.r1 + r.r4}
    sa, sb = "a", "b"
    for n in range(n_max + 1):
        if expand_over(sa, first) != A(m + n) or expand_over(sb, first) != B(m + n):
            return False
        if A(m) + expand_over(sa, second) != A(m + n + 2) + A(m):
            return False
        if A(m) + expand_over(sb, second) != B(m + n + 2) + A(m):
            return False
        sa, sb = apply_morphism(SIGMA, sa), apply_morphism(SIGMA, sb)
    return True


def envelope_words_table(seq: "Seq | str", m_max: int) -> list[tuple[EnvelopeId, str]]:
    seq = Seq.parse(seq)
    return [(EnvelopeId(seq, t, m), envelope_word(EnvelopeId(seq, t, m))) for m in range(1, m_max + 1) for t in (1, 2)]
