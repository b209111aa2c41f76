"""Probe multiplicativity of psi under connected sum and dump any findings as JSON."""
import argparse
import json

from freeknot.gauss import random_corpus
from freeknot.harness import connected_sum_probe


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--max-chords", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="write findings to this JSON file")
    args = ap.parse_args(argv)

    pool = random_corpus(2 * args.pairs, 0, args.max_chords, args.seed)
    count, findings = connected_sum_probe(zip(pool[::2], pool[1::2]))
    payload = [f.to_dict() for f in findings]
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
    print(f"{count} pairs, {len(findings)} findings")
    for f in payload[:5]:
        print(json.dumps(f))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
