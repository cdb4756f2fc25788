"""Return words, envelope words and occurrence spectra of the period-doubling sequence."""

from .envelope import EnvelopeFit, EnvelopeId, envelope_of, envelope_word
from .errors import ClassificationMismatch, InvalidIndex, MalformedWord, NotAFactor, UnknownLetter
from .factors import mirror, bar, is_palindrome, occurrences, return_words
from .returns import classify, envelope_return_words, transported_return_words
from .spectrum import Relation, relation_brute, relation_closed, squares
from .words import SIGMA, TAU1, TAU2, Seq, apply_morphism, block, delta, prefix

__all__ = [
    "ClassificationMismatch", "EnvelopeFit", "EnvelopeId", "InvalidIndex", "MalformedWord", "NotAFactor",
    "Relation", "SIGMA", "Seq", "TAU1", "TAU2", "UnknownLetter", "apply_morphism", "bar", "block",
    "classify", "delta", "envelope_of", "envelope_return_words", "envelope_word", "is_palindrome",
    "mirror", "occurrences", "prefix", "relation_brute", "relation_closed", "return_words", "squares",
    "transported_return_words",
]
