"""Named check suites pitting every closed form against brute force.

Each check is a function of :class:`VerifyLimits` returning a :class:`Check`.
Suites are lists of check names; ``all`` is their union in registration order.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable

from . import factors as fx
from . import reference as ref
from .envelope import (
    EnvelopeId,
    decompose,
    envelope_of,
    envelope_word,
    palindromic_prefixes,
    recursion_holds,
    verify_strong_extension,
    verify_unique_occurrence,
)
from .errors import ClassificationMismatch, NotAFactor
from .returns import (
    classify,
    envelope_first_positions,
    envelope_return_words,
    transported_return_words,
    verify_block_alphabets,
)
from .spectrum import (
    closed_form_relation,
    consecutive_pair_lengths,
    cubes_brute,
    expected_pair_lengths,
    far_pairs_separated,
    relations_brute,
    spectrum,
    squares,
    squares_brute,
)
from .words import SIGMA, Seq, apply_morphism, block, delta, prefix, tau, text

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class VerifyLimits:
    """Knobs for the check suites. ``None`` means the suite's own default."""

    max_m: int | None = None
    max_len: int = 64
    tokens: int | None = None
    horizon: int = 1 << 16
    square_horizon: int = 4096
    classify_len: int = 32
    theta_len: int = 32
    strong_count: int = 50
    spectrum_p: int = 500
    far_samples: int = 200
    far_p: int = 200
    pair_p: int = 200
    seed: int = 0

    def m(self, default: int) -> int:
        return default if self.max_m is None else self.max_m

    def t(self, default: int) -> int:
        return default if self.tokens is None else self.tokens


CheckFn = Callable[[VerifyLimits], Check]
_CHECKS: dict[str, CheckFn] = {}
SUITES: dict[str, list[str]] = {}


def check(*suites: str):
    def register(fn: Callable[[VerifyLimits], tuple[bool, str]]) -> CheckFn:
        name = fn.__name__

        def run(limits: VerifyLimits) -> Check:
            try:
                result = fn(limits)
            except (AssertionError, NotAFactor, ClassificationMismatch) as exc:
                return Check(name, FAIL, f"{type(exc).__name__}: {exc}")
            if result is None:
                return Check(name, SKIPPED, "")
            ok, detail = result
            if ok is None:
                return Check(name, SKIPPED, detail)
            return Check(name, PASS if ok else FAIL, detail)

        run.__name__ = name
        _CHECKS[name] = run
        for s in suites:
            SUITES.setdefault(s, []).append(name)
        return run

    return register


def _factors(seq: Seq, n: int, limits: VerifyLimits) -> list[str]:
    return fx.factors(seq, n, limits.horizon)


def _fails(items, limit: int = 5) -> str:
    items = list(items)
    return f"{len(items)} failures, first: {items[:limit]}"


# ---------------------------------------------------------------- core


@check("core")
def fixed_point(limits):
    for k in range(17):
        n = 2**k
        w = prefix(Seq.D, n)
        img = apply_morphism(SIGMA, w)
        if len(img) != 2 * n or img != prefix(Seq.D, 2 * n):
            return False, f"sigma(D[1..{n}]) != D[1..{2 * n}]"
    return True, "sigma(D[1..2^k]) = D[1..2^(k+1)] for k <= 16"


@check("core")
def block_identities(limits):
    bad = []
    for m in range(17):
        A, B = block("A", m), block("B", m)
        if len(A) != 2**m or A[:-1] != B[:-1] or A[-1] != delta(m) or B[-1] != delta(m + 1):
            bad.append(("last letter", m))
        if A != "a" + "".join(block("B", j) for j in range(m)):
            bad.append(("product form", m))
        if block("A", m + 1) != A + B or block("B", m + 1) != A + A:
            bad.append(("doubling", m))
    return not bad, _fails(bad) if bad else "m <= 16"


@check("core")
def theta_images(limits):
    n = limits.horizon
    d = prefix(Seq.D, n)
    for s in (Seq.THETA1, Seq.THETA2):
        if prefix(s, n) != apply_morphism(tau(s), d)[:n]:
            return False, f"{s} prefix is not the tau image of D"
        if set(prefix(s, n)) != set(s.alphabet):
            return False, f"{s} uses letters {sorted(set(prefix(s, n)))}"
    return True, f"n = {n}"


@check("core")
def isolated_b(limits):
    d = prefix(Seq.D, limits.horizon)
    return "bb" not in d, f"'bb' absent from D[1..{limits.horizon}]"


@check("core")
def block_occurs_twice(limits):
    bad = []
    for m in range(13):
        A, B = block("A", m), block("B", m)
        if fx.count_in(A + A, A) != 2 or fx.count_in(A + B + A, A) != 2:
            bad.append(m)
    return not bad, _fails(bad) if bad else "A_m occurs twice in A_mA_m and A_mB_mA_m, m <= 12"


@check("core")
def block_alphabets(limits):
    bad = [m for m in range(1, 7) if not verify_block_alphabets(m, 6)]
    return not bad, _fails(bad) if bad else "m <= 6, n <= 6"


@check("core")
def envelope_recursion(limits):
    bad = [m for m in range(1, 15) if not recursion_holds(m)]
    return not bad, _fails(bad) if bad else "m <= 14"


@check("core")
def envelope_lengths_and_palindromes(limits):
    bad = []
    for m in range(1, 15):
        e1, e2 = envelope_word(EnvelopeId(Seq.D, 1, m)), envelope_word(EnvelopeId(Seq.D, 2, m))
        if len(e1) != 2**m - 1 or len(e2) != 3 * 2 ** (m - 1) - 1:
            bad.append(("length", m))
        if not (fx.is_palindrome(e1) and fx.is_palindrome(e2)):
            bad.append(("palindrome", m))
    return not bad, _fails(bad) if bad else "m <= 14"


@check("core")
def palindrome_join_table(limits):
    bad = []
    for n in range(2, 11):
        for k in range(1, n):
            for m in range(0, 11):
                w = envelope_word(EnvelopeId(Seq.D, 1, n)) + delta(m) + envelope_word(EnvelopeId(Seq.D, 1, k))
                expect = n - k == 1 and m % 2 == k % 2
                if fx.is_palindrome(w) != expect:
                    bad.append((n, k, m))
                elif expect and w != envelope_word(EnvelopeId(Seq.D, 2, n)):
                    bad.append((n, k, m, "not E_n^2"))
    return not bad, _fails(bad) if bad else "E_n^1 d_m E_k^1 palindromic iff n-k=1 and m=k mod 2, 1<=k<n<=10"


@check("core")
def palindromic_prefixes_are_envelopes(limits):
    ones = {envelope_word(EnvelopeId(Seq.D, 1, n)) for n in range(1, 12)}
    bad = []
    for m in range(1, 11):
        for t in (1, 2):
            extra = [w for w in palindromic_prefixes(EnvelopeId(Seq.D, t, m)) if w not in ones]
            if extra:
                bad.append((t, m, extra[:2]))
    return not bad, _fails(bad) if bad else "m <= 10"


@check("core")
def decomposition_parity(limits):
    bad = []
    for t in (1, 2):
        for m in range(2, 11):
            for n in range(1, m):
                _, seps = decompose(t, m, n)
                target = envelope_word(EnvelopeId(Seq.D, t, m - n))
                if seps != (target if n % 2 == 0 else fx.bar(target)):
                    bad.append((t, m, n))
    return not bad, _fails(bad) if bad else "separators = E_(m-n)^t (n even) or its bar (n odd), m <= 10"


@check("core")
def matcher_agreement(limits):
    t = prefix(Seq.D, 1 << 12)
    rng = random.Random(limits.seed)
    bad = []
    for _ in range(200):
        i, n = rng.randrange(len(t) - 64), rng.randrange(1, 65)
        w = t[i : i + n]
        if list(fx.kmp_search(t, w)) != fx.find_all(t, w):
            bad.append(w)
    return not bad, _fails(bad) if bad else "KMP and str.find agree on 200 sampled factors"


# ---------------------------------------------------------------- return words of envelopes


@check("thm21")
def type1_envelope_returns(limits):
    tokens, bad = limits.t(512), []
    for m in range(1, limits.m(10) + 1):
        e = envelope_word(EnvelopeId(Seq.D, 1, m))
        c = classify(Seq.D, e, tokens)
        if c.kind is not Seq.THETA1 or c.alphabet != {"a": block("A", m), "b": block("A", m - 1)} or c.r0:
            bad.append(m)
    return not bad, _fails(bad) if bad else f"m <= {limits.m(10)}, {tokens} tokens spell Theta1 over (A_m, A_m-1)"


@check("thm21")
def type1_first_positions(limits):
    bad = []
    for m in range(1, limits.m(10) + 1):
        env = EnvelopeId(Seq.D, 1, m)
        if list(fx.occurrences(Seq.D, env.word, 3).positions) != envelope_first_positions(env):
            bad.append(m)
    return not bad, _fails(bad) if bad else "first three positions match"


@check("thm22")
def type2_envelope_returns(limits):
    tokens, bad = limits.t(256), []
    for m in range(1, limits.m(8) + 1):
        e = envelope_word(EnvelopeId(Seq.D, 2, m))
        c = classify(Seq.D, e, tokens)
        A, B = (lambda k: block("A", k)), (lambda k: block("B", k))
        want = {"a": A(m - 1), "b": A(m - 1) + A(m) + B(m + 1), "c": B(m) + B(m - 1)}
        if c.kind is not Seq.THETA2 or c.alphabet != want or c.r0 != A(m):
            bad.append(m)
    return not bad, _fails(bad) if bad else f"m <= {limits.m(8)}, {tokens} tokens spell Theta2, r0 = A_m"


@check("thm22")
def type2_first_positions(limits):
    bad = []
    for m in range(1, limits.m(8) + 1):
        env = EnvelopeId(Seq.D, 2, m)
        if list(fx.occurrences(Seq.D, env.word, 5).positions) != envelope_first_positions(env):
            bad.append(m)
    return not bad, _fails(bad) if bad else "first five positions match"


# ---------------------------------------------------------------- envelope extension


@check("thm31")
def unique_in_envelope(limits):
    words = _factors(Seq.D, limits.max_len, limits)
    bad = [w for w in words if not verify_unique_occurrence(Seq.D, w)]
    return not bad, _fails(bad) if bad else f"{len(words)} factors of length <= {limits.max_len}"


@check("thm31")
def envelope_length_bounds(limits):
    words = _factors(Seq.D, limits.max_len, limits)
    bad, small = [], []
    for w in words:
        fit = envelope_of(Seq.D, w)
        t, m, n = fit.env.type, fit.env.m, len(w)
        mid = len(fit.envelope) // 2
        if not fit.offset <= mid < fit.offset + n and len(fit.envelope) % 2:
            bad.append((w, "middle letter"))
        lo = 2 ** (m - 2) + 1 if t == 1 else 2 ** (m - 1) + 1
        hi = 2**m - 1 if t == 1 else 3 * 2 ** (m - 1) - 1
        if m < 3:
            if not lo <= n <= hi:
                small.append(w)
            continue
        if not lo <= n <= hi:
            bad.append((w, "length"))
        core = envelope_word(EnvelopeId(Seq.D, 1, m - 2)) if t == 1 else None
        if t == 1 and core not in w:
            bad.append((w, "E_(m-2)^1"))
        if t == 2:
            d = delta(m - 1)
            if d + envelope_word(EnvelopeId(Seq.D, 1, m - 1)) + d not in w:
                bad.append((w, "d E_(m-1)^1 d"))
    note = f"m < 3 outside the length bounds (classified by brute force): {small}" if small else ""
    return not bad, _fails(bad) if bad else f"{len(words)} factors; {note}".rstrip("; ")


@check("thm32")
def strong_extension(limits):
    words = _factors(Seq.D, limits.max_len, limits)
    bad = [w for w in words if not verify_strong_extension(Seq.D, w, limits.strong_count)]
    return not bad, _fails(bad) if bad else f"{len(words)} factors, first {limits.strong_count} occurrences each"


# ---------------------------------------------------------------- general factors


@check("thm41")
def classify_factors(limits):
    words = _factors(Seq.D, limits.classify_len, limits)
    tokens, bad = limits.t(128), []
    for w in words:
        try:
            c = classify(Seq.D, w, tokens)
        except ClassificationMismatch as exc:
            bad.append((w, str(exc)))
            continue
        if (c.kind is Seq.THETA1) != (c.fit.env.type == 1):
            bad.append((w, "kind vs envelope type"))
    return not bad, _fails(bad) if bad else f"{len(words)} factors, {tokens} tokens each"


def _transport_bad(seq: Seq, words: list[str]) -> list:
    bad = []
    for w in words:
        closed = transported_return_words(seq, w)
        found = fx.return_words(seq, w, 4)
        env_lengths = envelope_return_words(envelope_of(seq, w).env)
        got = (found.r0, found[1], found[2], found[4] if closed.r4 is not None else None)
        if got != (closed.r0, closed.r1, closed.r2, closed.r4):
            bad.append(w)
        elif (len(closed.r1), len(closed.r2)) != (len(env_lengths.r1), len(env_lengths.r2)):
            bad.append((w, "length"))
    return bad


@check("thm41")
def transport_matches_brute(limits):
    words = _factors(Seq.D, limits.max_len, limits)
    bad = _transport_bad(Seq.D, words)
    return not bad, _fails(bad) if bad else f"{len(words)} factors: r0, r1, r2, r4 shifted from the envelope"


# ---------------------------------------------------------------- reflexivity


@check("reflexivity", "tables")
def return_table_rows(limits):
    bad = []
    for (s, w), (kind, r1, r2, r4) in ref.RETURN_TABLE.items():
        c = classify(s, w, limits.t(128))
        want = {"a": r1, "b": r2} if r4 is None else {"a": r1, "b": r2, "c": r4}
        if c.kind.value != kind or c.alphabet != want:
            bad.append((s, w))
    return not bad, _fails(bad) if bad else f"{len(ref.RETURN_TABLE)} rows reproduced"


@check("reflexivity", "tables")
def theta_envelope_returns(limits):
    bad = []
    for s in (Seq.THETA1, Seq.THETA2):
        for m in range(1, limits.m(7) + 1):
            for t in (1, 2):
                env = EnvelopeId(s, t, m)
                closed = envelope_return_words(env)
                found = fx.return_words(s, env.word, 4)
                if (found.r0, found[1], found[2]) != (closed.r0, closed.r1, closed.r2):
                    bad.append(str(env))
                elif closed.r4 is not None and found[4] != closed.r4:
                    bad.append(str(env))
                elif (closed.kind is Seq.THETA1) != (t == 1):
                    bad.append((str(env), "kind"))
    return not bad, _fails(bad) if bad else f"closed-form returns of Theta envelopes, m <= {limits.m(7)}"


def _theta_sweep(limits: VerifyLimits, seq: Seq) -> tuple[bool, str]:
    words = _factors(seq, limits.theta_len, limits)
    tokens, bad = limits.t(128), []
    for w in words:
        try:
            c = classify(seq, w, tokens)
        except ClassificationMismatch as exc:
            bad.append((w, str(exc)))
            continue
        if c.kind not in (Seq.THETA1, Seq.THETA2):
            bad.append((w, "kind"))
        if not verify_unique_occurrence(seq, w):
            bad.append((w, "unique"))
        if not verify_strong_extension(seq, w, limits.strong_count):
            bad.append((w, "strong"))
    bad += _transport_bad(seq, words)
    return not bad, _fails(bad) if bad else f"{len(words)} factors of length <= {limits.theta_len}"


@check("reflexivity")
def theta1_factors(limits):
    return _theta_sweep(limits, Seq.THETA1)


@check("reflexivity")
def theta2_factors(limits):
    return _theta_sweep(limits, Seq.THETA2)


# ---------------------------------------------------------------- spectrum


@check("spectrum")
def spectrum_closed_vs_brute(limits):
    words = _factors(Seq.D, limits.max_len, limits)
    bad, deferred = [], 0
    for w in words:
        verdicts = spectrum(w, 1, limits.spectrum_p)
        deferred += verdicts[0].source.value == "brute_force"
        if [v.relation for v in verdicts] != relations_brute(Seq.D, w, limits.spectrum_p):
            bad.append(w)
    detail = f"{len(words)} factors, p <= {limits.spectrum_p}; {deferred} words with m <= 2 answered by brute force"
    return not bad, _fails(bad) if bad else detail


@check("spectrum")
def spectrum_small_m_formulas(limits):
    words = [w for w in _factors(Seq.D, 8, limits) if envelope_of(Seq.D, w).env.m <= 2]
    bad = []
    for w in words:
        fit = envelope_of(Seq.D, w)
        theta = text(Seq.THETA1 if fit.env.type == 1 else Seq.THETA2, limits.spectrum_p)
        brute = relations_brute(Seq.D, w, limits.spectrum_p)
        for p in range(limits.spectrum_p):
            if closed_form_relation(fit.env.type, fit.env.m, len(w), theta[p]) != brute[p]:
                bad.append((w, p + 1))
                break
    return not bad, _fails(bad) if bad else f"printed formulas also hold for the {len(words)} words with m <= 2"


@check("spectrum")
def far_pairs(limits):
    words = _factors(Seq.D, limits.max_len, limits)
    sample = random.Random(limits.seed).sample(words, min(limits.far_samples, len(words)))
    bad = [w for w in sample if not far_pairs_separated(w, limits.far_p)]
    return not bad, _fails(bad) if bad else f"{len(sample)} sampled factors, p_max = {limits.far_p}"


@check("spectrum")
def pair_lengths(limits):
    bad, printed_off = [], []
    for m in range(1, limits.m(8) + 1):
        for t in (1, 2):
            e = envelope_word(EnvelopeId(Seq.D, t, m))
            seen = consecutive_pair_lengths(Seq.D, e, limits.pair_p)
            want = expected_pair_lengths(t, m)
            if seen != want:
                bad.append((t, m, sorted(seen)))
            if seen != ref.PRINTED_PAIR_LENGTHS[t](m):
                printed_off.append((t, m))
    detail = f"m <= {limits.m(8)}, p <= {limits.pair_p}"
    if printed_off:
        types = sorted({t for t, _ in printed_off})
        detail += f"; printed set differs for type {types}: {ref.CORRECTIONS['pair lengths type 1']}"
    return not bad, _fails(bad) if bad else detail


@check("spectrum")
def square_census(limits):
    n = limits.square_horizon
    closed, brute = squares(n), squares_brute(n)
    if set(closed) != set(brute) or len(closed) != len(brute):
        diff = sorted(set(closed) ^ set(brute))[:5]
        return False, f"closed {len(closed)} vs brute {len(brute)}; first differences {diff}"
    if n >= 8 and ("ab", 5) not in closed:
        return False, "('ab', 5) missing"
    return True, f"{len(closed)} squares in D[1..{n}]"


@check("spectrum")
def cube_census(limits):
    n = limits.square_horizon
    cubes = cubes_brute(n)
    sq = set(squares(n))
    bad = [(w, q) for w, q in cubes if (w, q) not in sq or (w, q + len(w)) not in sq]
    return not bad, _fails(bad) if bad else f"{len(cubes)} cubes in D[1..{n}], each two overlapping squares"


# ---------------------------------------------------------------- printed tables


@check("tables")
def blocks_table(limits):
    bad, corrected = [], []
    for (row, m), printed in ref.BLOCKS_TABLE.items():
        ours = block(row, m) if row in "AB" else envelope_word(EnvelopeId(Seq.D, int(row[1]), m))
        if ours != printed:
            key = f"blocks {row} m={m}"
            (corrected if key in ref.CORRECTIONS else bad).append(key)
    if ref.BLOCKS_TABLE[("E2", 4)] == envelope_word(EnvelopeId(Seq.D, 2, 4)):
        bad.append("expected misprint reproduced")
    detail = "; ".join(f"{k}: {ref.CORRECTIONS[k]}" for k in corrected)
    return not bad, _fails(bad) if bad else f"{len(ref.BLOCKS_TABLE)} cells; corrected {detail}"


@check("tables")
def envelopes_table(limits):
    bad, corrected = [], []
    for (s, t, m), printed in ref.ENVELOPE_TABLE.items():
        if envelope_word(EnvelopeId(Seq.parse(s), t, m)) != printed:
            key = f"envelopes {s} type {t} m={m}"
            (corrected if key in ref.CORRECTIONS else bad).append(key)
    if envelope_word(EnvelopeId(Seq.D, 2, 4)) != "abaaabababaaabababaaaba":
        bad.append("E_4^2 not the 23-letter value")
    misprint = ref.ENVELOPE_TABLE[("Theta1", 1, 4)]
    if misprint in prefix(Seq.THETA1, limits.horizon):
        bad.append("printed 1E_4^1 is a factor after all")
    detail = "; ".join(f"{k}: {ref.CORRECTIONS[k]}" for k in corrected)
    return not bad, _fails(bad) if bad else f"{len(ref.ENVELOPE_TABLE)} cells; corrected {detail}"


@check("tables")
def worked_tilings(limits):
    bad = []
    for (s, w), (r1, r2, r4, theta_word) in ref.TILINGS.items():
        c = classify(s, w, len(theta_word))
        want = {"a": r1, "b": r2} if r4 is None else {"a": r1, "b": r2, "c": r4}
        if c.alphabet != want or prefix(c.kind, len(theta_word)) != theta_word:
            bad.append(w)
        elif c.r0 + c.spell(theta_word) != prefix(s, len(c.r0) + len(c.spell(theta_word))):
            bad.append((w, "spelling"))
    return not bad, _fails(bad) if bad else "aba over Theta1 and aa over Theta2"


@check("tables")
def sequence_prefixes(limits):
    differs = [s for s, printed in ref.SEQUENCE_PREFIXES.items() if prefix(s, len(printed)) != printed]
    return None, f"non-normative, not asserted; printed prefix differs for {differs}"


SUITES["all"] = [name for name in _CHECKS]
SUITE_NAMES = ("all", "core", "thm21", "thm22", "thm31", "thm32", "thm41", "reflexivity", "spectrum", "tables")


def run_suite(name: str, limits: VerifyLimits | None = None) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    limits = limits or VerifyLimits()
    return [_CHECKS[c](limits) for c in SUITES[name]]


# ---------------------------------------------------------------- golden files


def golden_payloads(limits: VerifyLimits | None = None) -> dict[str, object]:
    limits = limits or VerifyLimits()
    n = limits.square_horizon
    blocks = {f"{row}_{m}": (block(row, m) if row in "AB" else envelope_word(EnvelopeId(Seq.D, int(row[1]), m)))
              for row, m in ref.BLOCKS_TABLE}
    envelopes = {str(EnvelopeId(Seq.parse(s), t, m)): envelope_word(EnvelopeId(Seq.parse(s), t, m))
                 for s, t, m in ref.ENVELOPE_TABLE}
    returns = []
    for s, w in ref.RETURN_TABLE:
        c = classify(s, w, 128)
        returns.append({"seq": s, "word": w, "kind": c.kind.value, "alphabet": c.alphabet, "r0": c.r0})
    return {
        "tables.json": {"blocks": blocks, "envelopes": envelopes, "returns": returns},
        f"squares_{n}.json": [[w, q] for w, q in squares(n)],
        f"cubes_{n}.json": [[w, q] for w, q in cubes_brute(n)],
    }


def write_golden(directory: str | Path, limits: VerifyLimits | None = None) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, payload in golden_payloads(limits).items():
        path = directory / name
        path.write_text(json.dumps(payload, indent=1) + "\n")
        written.append(path)
    return written


def limits_dict(limits: VerifyLimits) -> dict:
    return asdict(limits)
