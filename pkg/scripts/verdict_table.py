"""Verdicts of a fixed list of sequents across the five logics."""

import argparse
from dataclasses import dataclass, field

from fundlogic.engine import Budget, check
from fundlogic.formula import parse_sequent
from fundlogic.rules import LOGICS

DEFAULT = [
    "p & q |- q & p",
    "~~~p |- ~p",
    "~~p |- p",
    "q |- p | ~p",
    "q |- ~p | ~~p",
    "p & (q | r) |- (p & q) | (p & r)",
    "p & (q | r) |- (p | ~p) | ((p & q) | (p & r))",
    "p & (q | r) |- (s | ~s) | ((p & q) | (p & r))",
    "~(~p | ~(q | r)) |- ~(~p | ~q) | ~(~p | ~r)",
    "p0 & ~p3 & ~(p0 & ~p1) & ~(p1 & ~p2) & ~(p2 & ~p3) |- _bot & ~_bot",
]


@dataclass
class TableConfig:
    sequents: list[str] = field(default_factory=lambda: list(DEFAULT))
    max_size: int = 4
    depth: int = 2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sequents", nargs="*")
    ap.add_argument("--max-size", type=int, default=TableConfig.max_size)
    ap.add_argument("--depth", type=int, default=TableConfig.depth)
    a = ap.parse_args()
    cfg = TableConfig(sequents=a.sequents or list(DEFAULT), max_size=a.max_size, depth=a.depth)
    budget = Budget(max_size=cfg.max_size, universe_depth=cfg.depth)
    print("  ".join(f"{name[:8]:8}" for name in LOGICS) + "  sequent")
    for text in cfg.sequents:
        goal = parse_sequent(text)
        row = [check(goal, logic, budget).kind for logic in LOGICS]
        print("  ".join(f"{k:8}" for k in row) + f"  {goal}")


if __name__ == "__main__":
    main()
