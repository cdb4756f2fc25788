"""Printed reference values the engine is checked against, with known misprints.

Each table maps a key to the printed string. ``CORRECTIONS`` lists the
entries whose printed form contradicts the defining formulas; for those the
formula value is what the engine produces and what the checks pin.
"""

from __future__ import annotations

# (row, m) -> printed value, rows A, B, E1, E2 over D
BLOCKS_TABLE = {
    ("A", 0): "a",
    ("A", 1): "ab",
    ("A", 2): "abaa",
    ("A", 3): "abaaabab",
    ("A", 4): "abaaabababaaabaa",
    ("B", 0): "b",
    ("B", 1): "aa",
    ("B", 2): "abab",
    ("B", 3): "abaaabaa",
    ("B", 4): "abaaabababaaabab",
    ("E1", 1): "a",
    ("E1", 2): "aba",
    ("E1", 3): "abaaaba",
    ("E1", 4): "abaaabababaaaba",
    ("E2", 1): "aa",
    ("E2", 2): "ababa",
    ("E2", 3): "abaaabaaaba",
    ("E2", 4): "abaaabababaaababaaaba",
}

# (seq, type, m) -> printed envelope word
ENVELOPE_TABLE = {
    ("D", 1, 1): "a",
    ("D", 1, 2): "aba",
    ("D", 1, 3): "abaaaba",
    ("D", 1, 4): "abaaabababaaaba",
    ("D", 2, 1): "aa",
    ("D", 2, 2): "ababa",
    ("D", 2, 3): "abaaabaaaba",
    ("D", 2, 4): "abaaabababaaabababaaaba",
    ("Theta1", 1, 1): "a",
    ("Theta1", 1, 2): "abba",
    ("Theta1", 1, 3): "abbaaabba",
    ("Theta1", 1, 4): "abbaaababbabbbaaabba",
    ("Theta1", 2, 1): "b",
    ("Theta1", 2, 2): "aa",
    ("Theta1", 2, 3): "abbabba",
    ("Theta1", 2, 4): "abbaaabbaaabba",
    ("Theta2", 1, 1): "a",
    ("Theta2", 1, 2): "aba",
    ("Theta2", 1, 3): "abacacaba",
    ("Theta2", 1, 4): "abacacabababacacaba",
    ("Theta2", 2, 1): "aca",
    ("Theta2", 2, 2): "ababa",
    ("Theta2", 2, 3): "abacacabacacaba",
    ("Theta2", 2, 4): "abacacabababacacabababacacaba",
}

# (seq, word) -> (kind, r1, r2, r4); explicit rows of the Theta return tables and the worked examples
RETURN_TABLE = {
    ("D", "a"): ("Theta1", "ab", "a", None),
    ("D", "aa"): ("Theta2", "a", "aababab", "aab"),
    ("D", "aba"): ("Theta1", "abaa", "ab", None),
    ("Theta1", "a"): ("Theta1", "abb", "a", None),
    ("Theta1", "b"): ("Theta2", "b", "baaa", "ba"),
    ("Theta1", "aa"): ("Theta2", "a", "aabbabbabb", "aabb"),
    ("Theta2", "a"): ("Theta1", "ab", "ac", None),
    ("Theta2", "aca"): ("Theta2", "ac", "acababab", "acab"),
    ("Theta2", "aba"): ("Theta1", "abacac", "ab", None),
    ("Theta2", "ababa"): ("Theta2", "ab", "ababacacabacacabacac", "ababacac"),
}

# worked tilings: (r1, r2, r4, the return word sequence transcribed as a Theta word)
TILINGS = {
    ("D", "aba"): ("abaa", "ab", None, "abbaaabbabbabbaaabbaaa"),
    ("D", "aa"): ("a", "aababab", "aab", "abacacabababacacab"),
}

# printed sequence prefixes; non-normative (the Theta1 line has isolated b's)
SEQUENCE_PREFIXES = {
    "D": "abaaabababaaabaaabababaaababababaaababababaaabaaab",
    "Theta1": "abbaaababbabbaaabbaaabbaaababbabbaaababbabbaaababbab",
    "Theta2": "abacacabababacacababacacabababacacabababacacabababac",
}

# pair-length sets {|r_p r_p+1|} as printed, as functions of m
PRINTED_PAIR_LENGTHS = {
    1: lambda m: {2 ** (m + 1), 3 * 2**m, 2**m},
    2: lambda m: {2 ** (m + 2), 2 ** (m + 1)},
}

CORRECTIONS = {
    "blocks E2 m=4": (
        "printed E_4^2 has 21 letters; B_4 B_3 d_4^-1 has 23 (abaaabababaaabababaaaba), "
        "matching the printed envelope table"
    ),
    "envelopes Theta1 type 1 m=4": (
        "printed 1E_4^1 'abbaaababbabbbaaabba' has an isolated b and a bbb run, impossible in a tau1 image; "
        "tau1(E_4^1) = 'abbaaabbabbabbaaabba'"
    ),
    "pair lengths type 1": (
        "printed middle value 3*2^m disagrees with |r_1| + |r_2| = 2^m + 2^(m-1) = 3*2^(m-1)"
    ),
    "sequence prefixes": "printed prefixes are non-normative; morphism images are authoritative",
}
