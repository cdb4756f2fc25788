"""Count factors of D, Theta1 and Theta2 by length and tabulate their envelopes and return kinds."""

import argparse
from collections import Counter

from pdseq import Seq, classify, envelope_of
from pdseq.factors import factors


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=32)
    ap.add_argument("--tokens", type=int, default=128)
    args = ap.parse_args()

    for seq in Seq:
        words = factors(seq, args.max_len)
        by_len = Counter(len(w) for w in words)
        kinds = Counter()
        envs = Counter()
        for w in words:
            c = classify(seq, w, args.tokens)
            kinds[c.kind.value] += 1
            envs[str(envelope_of(seq, w).env)] += 1
        print(f"{seq.value}: {len(words)} factors of length <= {args.max_len}")
        print("  complexity:", " ".join(str(by_len[n]) for n in range(1, args.max_len + 1)))
        print("  return kinds:", dict(sorted(kinds.items())))
        print("  envelopes:", ", ".join(f"{e}:{k}" for e, k in envs.most_common(8)), "...")


if __name__ == "__main__":
    main()
