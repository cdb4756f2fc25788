"""Write the golden fixture files (tables, square and cube census) to a directory."""

import argparse

from pdseq.verify import VerifyLimits, write_golden


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", nargs="?", default="golden")
    ap.add_argument("--horizon", type=int, default=4096, help="prefix length for the square/cube census")
    args = ap.parse_args()
    for path in write_golden(args.out, VerifyLimits(square_horizon=args.horizon)):
        print(path)


if __name__ == "__main__":
    main()
