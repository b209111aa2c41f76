"""Random-walk invariance sweep over a generated corpus."""
import argparse
import json
import time

from freeknot.gauss import CLOSED, LONG, random_corpus
from freeknot.harness import check_walks, minimal


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-chords", type=int, default=10)
    ap.add_argument("--walk-max-chords", type=int, default=12)
    ap.add_argument("--steps", type=int, default=30)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--kind", choices=[LONG, CLOSED], default=LONG)
    args = ap.parse_args(argv)

    corpus = random_corpus(args.count, 0, args.max_chords, args.seed, args.kind)
    t0 = time.perf_counter()
    s = check_walks(corpus, args.steps, args.trials, args.seed, args.walk_max_chords)
    out = {
        "walks": s.walks,
        "steps": s.steps,
        "truncated": s.truncated,
        "failures": len(s.failures),
        "seconds": round(time.perf_counter() - t0, 2),
    }
    if s.failures:
        out["counterexample"] = minimal(s.failures).to_dict()
    print(json.dumps(out, indent=2))
    return 0 if s.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
