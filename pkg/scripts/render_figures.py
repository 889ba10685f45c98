"""Write DOT files for the two Sorites models and a represented lattice."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from fundlogic.formula import SoritesParams
from fundlogic.lattice import boolean_algebra, represent, representation_model, three_chain
from fundlogic.sorites import build_pseudosymmetric, build_symmetric, export_dot


@dataclass
class FigureConfig:
    n: int = 4
    delta: int = 1
    out: str = "figures"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=FigureConfig.n)
    ap.add_argument("--delta", type=int, default=FigureConfig.delta)
    ap.add_argument("--out", default=FigureConfig.out)
    cfg = FigureConfig(**vars(ap.parse_args()))
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    params = SoritesParams(cfg.n, cfg.delta)
    export_dot(build_symmetric(params), out / f"symmetric_{cfg.n}_{cfg.delta}.dot", "symmetric")
    export_dot(build_pseudosymmetric(params), out / f"pseudosymmetric_{cfg.n}_{cfg.delta}.dot", "pseudosymmetric")
    for name, L in (("boolean4", boolean_algebra(2)), ("chain3", three_chain())):
        export_dot(representation_model(represent(L)), out / f"filters_{name}.dot", name)
    for p in sorted(out.glob("*.dot")):
        print(p)


if __name__ == "__main__":
    main()
