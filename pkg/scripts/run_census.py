"""Census table for n = 0..N plus a serial-versus-parallel timing at the top size.

    python3 scripts/run_census.py --max-n 5 --jobs 4
"""

import argparse
import json
import os
import time
from dataclasses import asdict, dataclass

from degroot import dualization
from degroot.census import CSV_COLUMNS, census, csv_line, work_blocks


@dataclass(frozen=True)
class BenchConfig:
    max_n: int = 5
    jobs: int = 4
    repeats: int = 1


def timed(n, jobs):
    dualization.dual.cache_clear()
    dualization.compact_saturated_family.cache_clear()
    start = time.perf_counter()
    row = census(n, jobs=jobs)
    return row, time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=BenchConfig.max_n)
    ap.add_argument("--jobs", type=int, default=BenchConfig.jobs)
    ap.add_argument("--repeats", type=int, default=BenchConfig.repeats)
    cfg = BenchConfig(**vars(ap.parse_args()))

    print(",".join(CSV_COLUMNS))
    for n in range(cfg.max_n + 1):
        print(csv_line(census(n)))

    n = cfg.max_n
    serial = min(timed(n, 1)[1] for _ in range(cfg.repeats))
    parallel = min(timed(n, cfg.jobs)[1] for _ in range(cfg.repeats))
    print(json.dumps({
        "config": asdict(cfg),
        "cpus": os.cpu_count(),
        "blocks": len(work_blocks(n)),
        "serial_s": round(serial, 3),
        "parallel_s": round(parallel, 3),
        "speedup": round(serial / parallel, 2),
    }))


if __name__ == "__main__":
    main()
