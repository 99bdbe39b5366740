"""Check the clique-free lower bound (r = 2) on every connected triangle-free graph."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from nnsd.codecs import encode_graph6
from nnsd.sweeps import TRIANGLE_FREE_COLUMNS, default_jobs, triangle_free_sweep


@dataclass
class Config:
    max_n: int = 10
    jobs: int = 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--jobs", type=int, default=default_jobs())
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    tight: list = []
    rows = triangle_free_sweep(cfg.max_n, jobs=cfg.jobs, keep_tight=tight)
    print(",".join(TRIANGLE_FREE_COLUMNS))
    for r in rows:
        print(",".join(str(r[c]) for c in TRIANGLE_FREE_COLUMNS))
    for g in tight:
        print(f"tight: {encode_graph6(g).decode()} n={g.n} edges={g.edges()}")


if __name__ == "__main__":
    main()
