"""Exhaustive tree sweep: max-degree and leaf-bound characterizations.

    python scripts/tree_characterizations.py --max-n 12 --show-counterexamples 3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from nnsd.codecs import encode_graph6
from nnsd.families import enumerate_free_trees
from nnsd.solvers import nnsdn
from nnsd.sweeps import TREE_COLUMNS, default_jobs, tree_sweep
from nnsd.theorems import OMEGA_READINGS, omega_membership, tree_upper_bounds


@dataclass
class Config:
    max_n: int = 12
    jobs: int = 1
    show_counterexamples: int = 0


def counterexamples(max_n: int, limit: int, reading: str = "support"):
    """Trees attaining the leaf bound that the membership test rejects."""
    found = []
    for n in range(3, max_n + 1):
        for t in enumerate_free_trees(n):
            if len(found) >= limit:
                return found
            if nnsdn(t).value == tree_upper_bounds(t)[0] and not omega_membership(t, reading):
                found.append(t)
    return found


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--show-counterexamples", type=int, default=0)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    rows = tree_sweep(cfg.max_n, jobs=cfg.jobs)
    widths = [max(len(c), 6) for c in TREE_COLUMNS]
    print("  ".join(c.rjust(w) for c, w in zip(TREE_COLUMNS, widths)))
    for r in rows:
        print("  ".join(str(r[c]).rjust(w) for c, w in zip(TREE_COLUMNS, widths)))
    print(f"total trees: {sum(r['trees'] for r in rows)}")
    for reading in OMEGA_READINGS:
        key = "omega_mismatches" if reading == "support" else "omega_alt_mismatches"
        print(f"leaf-bound membership mismatches ({reading} reading): {sum(r[key] for r in rows)}")
    for t in counterexamples(cfg.max_n, cfg.show_counterexamples):
        print(f"  {encode_graph6(t).decode()}  n={t.n}  edges={t.edges()}  nnsdn={nnsdn(t).value}")


if __name__ == "__main__":
    main()
