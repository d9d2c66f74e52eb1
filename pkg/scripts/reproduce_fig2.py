"""Write plot data for the four capacity / minimum-entropy panels as CSV files.

    python3 scripts/reproduce_fig2.py --out-dir fig2 --points 201
"""

import argparse
import pathlib

from bcl import capacity
from bcl.cli import write_atomic


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="fig2")
    ap.add_argument("--points", type=int, default=201)
    ap.add_argument("--kappa-max", type=float, default=3.0)
    ap.add_argument("--energy", type=float, default=10.0)
    args = ap.parse_args()

    grid = capacity.GridConfig(points=args.points, kappa_max=args.kappa_max, energy=args.energy)
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for panel in capacity.PANELS:
        rows = capacity.plot_data(panel, grid)
        write_atomic(str(out / f"{panel}.csv"), capacity.to_csv(rows))
        print(f"{panel}: {len(rows)} rows, {len({r[1] for r in rows})} series -> {out / f'{panel}.csv'}")


if __name__ == "__main__":
    main()
