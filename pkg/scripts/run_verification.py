"""Run every numerical check at full scale and write one JSON report per check.

Full scale means 1000 Haar samples at 16 levels for the minimum-entropy search
and 500 two-copy samples; expect a few minutes on one core.

    python3 scripts/run_verification.py --out-dir reports [--quick]
"""

import argparse
import json
import pathlib
import sys
import time

from bcl import fock
from bcl import verification as V
from bcl.cli import write_atomic

FULL = dict(
    conjecture=lambda s: [V.verify_conjecture(k, 16, 1000, s) for k in (1.2, 1.5, 2.0)],
    transposition=lambda s: [V.verify_transposition(k, 40, seed=s) for k in (1.5, 2.0, 3.0)],
    spectra=lambda s: [V.verify_spectra(k, 8, 100, s) for k in (1.2, 1.5, 2.0, 3.0)],
    mixing=lambda s: [V.verify_mixing(0.7, fock.fock_state(2, 8), 40), V.verify_mixing(0.5, fock.coherent_state(1.0, 30), 40)],
    relent=lambda s: [V.verify_relative_entropy_bound(k, 20, s) for k in (1.2, 1.5, 2.0)],
    chain=lambda s: [V.verify_entropy_chain_sampled(1.5, 8, 50, s)],
    additivity=lambda s: [V.verify_additivity_two_copies(1.5, 8, 500, s)],
    eof=lambda s: [V.verify_eof(2.0, N, 50) for N in (0.0, 1.0, 3.0)],
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="reports")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--quick", action="store_true", help="use the small default suite instead")
    args = ap.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    fock.self_test()
    ok = True
    for name in V.SUITES:
        t0 = time.perf_counter()
        if args.quick:
            reports = [V.run_one(name, V.SuiteConfig(master_seed=args.seed))]
        else:
            reports = FULL[name](V.derive_seed(args.seed, name))
        write_atomic(str(out / f"{name}.json"), json.dumps([r.to_json() for r in reports], indent=2) + "\n")
        passed = all(r.passed for r in reports)
        ok &= passed
        worst = min(r.worst_margin for r in reports)
        print(f"{'PASS' if passed else 'FAIL'} {name:14s} worst margin {worst: .3e}  ({time.perf_counter() - t0:.1f}s)")
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
