"""Print the canonical filling of each lambda_i and the SSYT count for small shapes."""

import argparse

from esymstab.weights import build_lambda_i, canonical_filling, enumerate_ssyt


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--r", type=int, default=3)
    args = ap.parse_args(argv)

    for i in range(1, args.n):
        lam = build_lambda_i(args.n, args.r, i)
        print(f"lambda_{i} = {lam.entries}")
        print(canonical_filling(args.n, args.r, i))
        print()

    for shape in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)]:
        if len(shape) <= args.n:
            print(f"SSYT{shape} with entries <= {args.n}: {len(enumerate_ssyt(shape, args.n))}")


if __name__ == "__main__":
    main()
