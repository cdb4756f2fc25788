"""Exception types shared by every module."""

from __future__ import annotations


class PdseqError(Exception):
    pass


class MalformedWord(PdseqError, ValueError):
    """Empty word, or a letter outside the alphabet of the queried sequence."""


class UnknownLetter(MalformedWord):
    """A morphism was applied to a letter it has no image for."""


class InvalidIndex(PdseqError, ValueError):
    pass


class NotAFactor(PdseqError, LookupError):
    """The word was not found in the sequence.

    ``exhausted`` is False when the word is absent from the starting search
    horizon (a proof of absence), True when occurrences were found but the
    hard horizon cap was reached before enough of them turned up.
    """

    def __init__(self, word: str, seq: str, horizon: int, exhausted: bool = False):
        self.word = word
        self.seq = seq
        self.horizon = horizon
        self.exhausted = exhausted
        detail = "horizon-exhausted" if exhausted else "absent"
        super().__init__(f"{word!r} is not a factor of {seq} ({detail}, horizon={horizon})")


class ClassificationMismatch(PdseqError, AssertionError):
    """Brute-force return words disagree with the closed-form classification."""
