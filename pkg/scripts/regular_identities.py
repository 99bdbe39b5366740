"""Sampled regular graphs: packing/tuple identities, parity identities and degree bounds."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from nnsd.sweeps import REGULAR_COLUMNS, default_jobs, regular_sweep


@dataclass
class Config:
    pairs: list[tuple[int, int]] = field(default_factory=lambda: [(10, 3), (12, 3), (10, 4), (8, 5), (14, 4), (14, 5)])
    samples: int = 50
    seed: int = 7
    jobs: int = 1


def _pair(text: str) -> tuple[int, int]:
    n, r = text.split(":")
    return int(n), int(r)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pairs", nargs="*", type=_pair, help="n:r pairs")
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--jobs", type=int, default=default_jobs())
    args = ap.parse_args()
    cfg = Config(samples=args.samples, seed=args.seed, jobs=args.jobs)
    if args.pairs:
        cfg.pairs = args.pairs

    print(",".join(REGULAR_COLUMNS))
    for n, r in cfg.pairs:
        row = regular_sweep(n, r, cfg.samples, cfg.seed, jobs=cfg.jobs)
        print(",".join(str(row[c]) for c in REGULAR_COLUMNS))


if __name__ == "__main__":
    main()
