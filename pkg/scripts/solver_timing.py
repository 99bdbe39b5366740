"""Wall-clock comparison of the exhaustive oracle and branch and bound."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from nnsd import families as fam
from nnsd.graph import make_graph
from nnsd.solvers import Mode, solve_sign_optimum


@dataclass
class Config:
    sizes: tuple[int, ...] = (12, 16, 20, 24)
    p: float = 0.3
    seed: int = 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=float, default=Config.p)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    cfg = Config(p=args.p, seed=args.seed)
    rng = random.Random(cfg.seed)

    print(f"{'graph':>14} {'n':>3} {'value':>6} {'oracle_s':>9} {'bnb_s':>8} {'bnb_nodes':>10}")
    cases = [(f"G(n,{cfg.p})", make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < cfg.p]))
             for n in cfg.sizes]
    cases += [("sigma(3)", fam.sigma(3)), ("prism x3", fam.prism_copies(3))]
    for name, g in cases:
        t0 = time.perf_counter()
        b = solve_sign_optimum(g, Mode.NNSDF, "bnb")
        tb = time.perf_counter() - t0
        if g.n <= 24:
            t0 = time.perf_counter()
            o = solve_sign_optimum(g, Mode.NNSDF, "oracle")
            to = f"{time.perf_counter() - t0:9.3f}"
            assert o.value == b.value
        else:
            to = f"{'-':>9}"
        print(f"{name:>14} {g.n:>3} {b.value:>6} {to} {tb:8.3f} {b.nodes_explored:>10}")


if __name__ == "__main__":
    main()
