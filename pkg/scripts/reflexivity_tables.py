"""Print the envelope words of D, Theta1, Theta2 with their return words and return kind."""

import argparse

from pdseq import Seq
from pdseq.envelope import EnvelopeId, envelope_word
from pdseq.returns import envelope_return_words


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--width", type=int, default=40, help="truncate words longer than this")
    args = ap.parse_args()

    def cut(w):
        return w if len(w) <= args.width else w[: args.width] + f"...({len(w)})"

    for seq in Seq:
        print(f"== {seq.value}")
        for m in range(1, args.max_m + 1):
            for t in (1, 2):
                env = EnvelopeId(seq, t, m)
                r = envelope_return_words(env)
                alpha = " ".join(f"{x}={cut(w)}" for x, w in r.alphabet().items())
                print(f"{str(env):8} {cut(envelope_word(env)):44} {r.kind.value:6}  r0={cut(r.r0) or '-'}  {alpha}")


if __name__ == "__main__":
    main()
