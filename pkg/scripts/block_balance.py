"""How evenly the census work splits across workers.

Counts preorders per prefix block and reports the makespan bound of a
longest-first greedy schedule.  Independent of the host's core count.
"""

import argparse
import heapq

from degroot.census import enumerate_preorders, work_blocks


def lpt_speedup(sizes, workers):
    loads = [0] * workers
    for s in sorted(sizes, reverse=True):
        heapq.heapreplace(loads, loads[0] + s)
    return sum(sizes) / max(loads)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-n", type=int, default=5)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--depth", type=int, default=2)
    args = ap.parse_args()
    sizes = [sum(1 for _ in enumerate_preorders(args.n, prefix=p)) for p in work_blocks(args.n, args.depth)]
    total = sum(sizes)
    print(f"n={args.n} blocks={len(sizes)} preorders={total}")
    print(f"largest block share {max(sizes) / total:.3f}")
    print(f"greedy {args.workers}-worker bound {lpt_speedup(sizes, args.workers):.2f}x")


if __name__ == "__main__":
    main()
