"""Compare closed-form and brute-force spectrum verdicts over all short factors of D."""

import argparse
from collections import Counter

from pdseq import Seq
from pdseq.factors import factors
from pdseq.spectrum import relations_brute, spectrum


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=64)
    ap.add_argument("--p", type=int, default=500)
    args = ap.parse_args()

    tally, sources, disagree = Counter(), Counter(), []
    for w in factors(Seq.D, args.max_len):
        closed = spectrum(w, 1, args.p)
        brute = relations_brute(Seq.D, w, args.p)
        for v, b in zip(closed, brute):
            tally[v.relation.value] += 1
            sources[v.source.value] += 1
            if v.relation is not b:
                disagree.append((w, v.p))
    print("verdicts:", dict(tally))
    print("sources:", dict(sources))
    print("disagreements:", len(disagree), disagree[:10])


if __name__ == "__main__":
    main()
