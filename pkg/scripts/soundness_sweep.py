"""Check every admitted rule of each logic on all frames of its model class."""

import argparse
import time
from dataclasses import dataclass

from fundlogic.rules import LOGICS, soundness_sweep


@dataclass
class SweepConfig:
    max_size: int = 4
    logics: tuple[str, ...] = LOGICS


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=SweepConfig.max_size)
    ap.add_argument("--logic", action="append", choices=LOGICS)
    a = ap.parse_args()
    cfg = SweepConfig(max_size=a.max_size, logics=tuple(a.logic or LOGICS))
    bad = 0
    for logic in cfg.logics:
        t = time.perf_counter()
        res = soundness_sweep(logic, cfg.max_size)
        bad += len(res.violations)
        print(f"{logic:15} frames={res.frames:6} instances={res.instances:10} "
              f"violations={len(res.violations)} ({time.perf_counter() - t:.2f}s)")
        for v in res.violations[:3]:
            print(f"   {v.rule} on {sorted(v.frame.rel)} with {[sorted(p) for p in v.propositions]}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
