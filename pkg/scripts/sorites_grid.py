"""Verify every Sorites fact over a grid of (n, delta), for both readings of
the excluded-middle end states."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from fundlogic.formula import SoritesParams
from fundlogic.sorites import verify_facts


@dataclass
class GridConfig:
    n_min: int = 3
    n_max: int = 8
    delta_max: int = 3
    json_out: str | None = None


def run(cfg: GridConfig) -> list[dict]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for d in range(1, min(cfg.delta_max, n - 2) + 1):
            params = SoritesParams(n, d)
            t = time.perf_counter()
            sym = verify_facts(params, "symmetric")
            stated = verify_facts(params, "pseudosymmetric", lem_left_end="stated")
            emext = verify_facts(params, "pseudosymmetric", lem_left_end="emext")
            rows.append({
                "n": n, "delta": d,
                "symmetric": sym.passed,
                "pseudo_stated": stated.passed,
                "pseudo_emext": emext.passed,
                "failing_stated": sorted({r.name for r in stated.results if not r.passed}),
                "seconds": round(time.perf_counter() - t, 4),
            })
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(GridConfig()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v) if v is not None else str, default=v)
    cfg = GridConfig(**vars(ap.parse_args()))
    rows = run(cfg)
    print(f"{'n':>3} {'d':>2}  symmetric  pseudo(stated)  pseudo(emext)  failing(stated)")
    for r in rows:
        print(f"{r['n']:>3} {r['delta']:>2}  {str(r['symmetric']):9}  {str(r['pseudo_stated']):14}  "
              f"{str(r['pseudo_emext']):13}  {','.join(r['failing_stated']) or '-'}")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
