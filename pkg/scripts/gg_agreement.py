"""Compare ortho verdicts with fundamental verdicts on Goedel-Gentzen
translations over random sequents."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from fundlogic.engine import Budget, gg_embedding_check
from fundlogic.formula import And, Neg, Or, Sequent, Var


@dataclass
class GGConfig:
    samples: int = 200
    depth: int = 3
    variables: str = "pqr"
    max_size: int = 4
    seed: int = 0


def random_formula(rng: random.Random, depth: int, names: str):
    if depth == 0 or rng.random() < 0.25:
        return Var(rng.choice(names))
    k = rng.choice("nao")
    if k == "n":
        return Neg(random_formula(rng, depth - 1, names))
    return (And if k == "a" else Or)(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=GGConfig.samples)
    ap.add_argument("--depth", type=int, default=GGConfig.depth)
    ap.add_argument("--max-size", type=int, default=GGConfig.max_size)
    ap.add_argument("--seed", type=int, default=GGConfig.seed)
    a = ap.parse_args()
    cfg = GGConfig(samples=a.samples, depth=a.depth, max_size=a.max_size, seed=a.seed)
    rng = random.Random(cfg.seed)
    budget = Budget(max_size=cfg.max_size)
    tally: Counter = Counter()
    for _ in range(cfg.samples):
        goal = Sequent(random_formula(rng, cfg.depth, cfg.variables), random_formula(rng, cfg.depth, cfg.variables))
        rep = gg_embedding_check(goal, budget)
        tally[rep.status] += 1
        tally[f"ortho {rep.ortho.kind}"] += 1
        if rep.status == "disagree":
            print(f"DISAGREE {goal}: ortho {rep.ortho.kind}, fundamental {rep.fundamental.kind}")
    for k in sorted(tally):
        print(f"{k:20} {tally[k]}")


if __name__ == "__main__":
    main()
