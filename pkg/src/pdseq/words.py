"""Letters, words, the substitutions sigma / tau1 / tau2 and prefix generation.

Words are plain ``str`` over the letters ``a``, ``b``, ``c``. Positions in the
public API are 1-based; Python slicing is used internally.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .errors import InvalidIndex, UnknownLetter


class Seq(str, enum.Enum):
    """The three infinite sequences the engine knows about."""

    D = "D"
    THETA1 = "Theta1"
    THETA2 = "Theta2"

    @property
    def alphabet(self) -> str:
        return "abc" if self is Seq.THETA2 else "ab"

    @classmethod
    def parse(cls, tag: "str | Seq") -> "Seq":
        if isinstance(tag, Seq):
            return tag
        key = str(tag).strip().lower()
        aliases = {
            "d": cls.D,
            "t1": cls.THETA1,
            "theta1": cls.THETA1,
            "θ1": cls.THETA1,
            "t2": cls.THETA2,
            "theta2": cls.THETA2,
            "θ2": cls.THETA2,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown sequence tag {tag!r}; expected D, T1 or T2") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Morphism:
    name: str
    images: Mapping[str, str]
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_table", str.maketrans(dict(self.images)))

    def __hash__(self) -> int:
        return hash((self.name, tuple(sorted(self.images.items()))))

    def __call__(self, w: str) -> str:
        return apply_morphism(self, w)


SIGMA = Morphism("sigma", {"a": "ab", "b": "aa"})
TAU1 = Morphism("tau1", {"a": "a", "b": "bb"})
TAU2 = Morphism("tau2", {"a": "ab", "b": "acac"})

_TAU = {Seq.THETA1: TAU1, Seq.THETA2: TAU2}


def apply_morphism(m: Morphism, w: str) -> str:
    bad = set(w).difference(m.images)
    if bad:
        raise UnknownLetter(f"{m.name} has no image for {''.join(sorted(bad))!r}")
    return w.translate(m._table)


def tau(seq: Seq) -> Morphism:
    """The morphism carrying D onto ``seq`` (Theta1 or Theta2)."""
    return _TAU[Seq.parse(seq)]


@lru_cache(maxsize=None)
def _blocks(m: int) -> tuple[str, str]:
    if m == 0:
        return "a", "b"
    a, b = _blocks(m - 1)
    return a + b, a + a


def block(kind: str, m: int) -> str:
    """``A_m = sigma^m(a)`` or ``B_m = sigma^m(b)``, built by doubling."""
    if m < 0:
        raise InvalidIndex(f"block index must be >= 0, got {m}")
    if kind == "A":
        return _blocks(m)[0]
    if kind == "B":
        return _blocks(m)[1]
    raise ValueError(f"block kind must be 'A' or 'B', got {kind!r}")


def delta(m: int) -> str:
    """Last letter of A_m: ``a`` for even m, ``b`` for odd m."""
    if m < 0:
        raise InvalidIndex(f"delta index must be >= 0, got {m}")
    return "a" if m % 2 == 0 else "b"


_prefix_cache: dict[Seq, str] = {}
_prefix_lock = threading.Lock()


def text(seq: "Seq | str", n: int) -> str:
    """Return a cached prefix of ``seq`` of length at least ``n``.

    The returned string may be longer than ``n``; callers that need exactly
    ``n`` letters should use :func:`prefix`. Avoids copying large prefixes in
    hot search loops.
    """
    seq = Seq.parse(seq)
    cur = _prefix_cache.get(seq)
    if cur is not None and len(cur) >= n:
        return cur
    size = max(64, 1 << max(n - 1, 0).bit_length())
    if seq is Seq.D:
        new = block("A", size.bit_length() - 1)
    else:
        # every letter of D expands to at least one letter
        new = apply_morphism(_TAU[seq], text(Seq.D, size)[:size])
    with _prefix_lock:
        cur = _prefix_cache.get(seq)
        if cur is None or len(cur) < len(new):
            _prefix_cache[seq] = new
        return _prefix_cache[seq]


def prefix(seq: "Seq | str", n: int) -> str:
    """The first ``n`` letters of D, Theta1 or Theta2."""
    if n < 0:
        raise InvalidIndex(f"prefix length must be >= 0, got {n}")
    if n == 0:
        return ""
    return text(seq, n)[:n]
