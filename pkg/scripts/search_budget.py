"""How far does bounded BFS get on the seven-chord example as the chord cap grows?"""
import argparse
import time

from freeknot import parse_diagram
from freeknot.search import search_trivialize

D7 = "long: A E B F A G B C E D F D G C"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=100_000)
    ap.add_argument("--caps", type=int, nargs="+", default=[7, 8, 9, 10, 11])
    args = ap.parse_args(argv)

    D = parse_diagram(D7)
    print("cap  status       expanded  visited  seconds")
    for cap in args.caps:
        t0 = time.perf_counter()
        r = search_trivialize(D, args.budget, max_chords=cap)
        print(f"{cap:>3}  {r.status:<11}  {r.expanded:>8}  {r.visited:>7}  {time.perf_counter() - t0:7.2f}")


if __name__ == "__main__":
    main()
