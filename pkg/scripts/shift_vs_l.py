"""Compare twice the dihedral shift of phi with l over random long diagrams."""
import argparse

from freeknot.gauss import random_corpus
from freeknot.harness import shift_vs_l


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--max-chords", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    n, bad = shift_vs_l(random_corpus(args.count, 0, args.max_chords, args.seed))
    print(f"checked {n} diagrams, {len(bad)} with 2*shift != l")
    for text, l, m in bad[:10]:
        print(f"  {text}  l={l}  2*shift={m}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
