"""Command-line front end.

Exit codes: 0 success, 1 invalid parameters or I/O failure, 2 a verification
check failed, 3 a truncation budget was exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import json
import os
import sys
import tempfile
from typing import Optional, Sequence

from . import capacity, channels, verification
from .errors import BclError, TruncationBudgetExceeded

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_TRUNCATION = 0, 1, 2, 3
CHANNELS = ("thermal", "addnoise", "amp", "contra-amp")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _channel_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--channel", choices=CHANNELS, required=True, help="channel family")
    p.add_argument("--eta", type=float, help="transmissivity in [0, 1] (thermal)")
    p.add_argument("--N", type=float, default=0.0, help="environment photon number (thermal, amp, contra-amp; default: %(default)s)")
    p.add_argument("--n", type=float, help="added noise (addnoise)")
    p.add_argument("--kappa", type=float, help="gain >= 1 (amp, contra-amp)")


def _format_flag(p, default: str, choices=("json", "text")) -> None:
    p.add_argument("--format", choices=choices, default=default, help="output format (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bcl", description=__doc__.splitlines()[0], allow_abbrev=False,
                 formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    kw = dict(allow_abbrev=False, formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    p = sub.add_parser("capacity", help="energy-constrained classical capacity", **kw)
    _channel_flags(p)
    p.add_argument("--energy", type=float, required=True, help="mean input photon number E >= 0")
    _format_flag(p, "text")

    p = sub.add_parser("decompose", help="split into quantum-limited loss then amplification", **kw)
    _channel_flags(p)
    _format_flag(p, "text")

    p = sub.add_parser("plot", help="emit capacity / minimum-entropy plot data as CSV", **kw)
    p.add_argument("--panel", choices=capacity.PANELS, required=True)
    p.add_argument("--out", help="output path (stdout when omitted); written atomically")
    p.add_argument("--points", type=int, default=201, help="grid points per axis")
    p.add_argument("--format", choices=("csv",), default="csv", help="output format")

    d = verification.SuiteConfig()
    p = sub.add_parser("verify", help="run numerical verification checks", **kw)
    p.add_argument("--suite", choices=("all",) + verification.SUITES, default="all")
    p.add_argument("--kappa", type=float, default=None,
                   help=f"amplifier gain; for transposition the gain kappa0, for eof the squeezer gain (default: {d.kappa})")
    p.add_argument("--dim", type=int, default=None, help="input truncation of the selected check(s) (default: per check)")
    p.add_argument("--samples", type=int, default=None, help="number of random samples (default: per check)")
    p.add_argument("--N", type=float, default=d.eof_N, help="thermal photon number for the eof check")
    p.add_argument("--seed", type=int, default=d.master_seed,
                   help="seed; used directly by a single check, mixed with the check name for --suite all")
    p.add_argument("--tolerance", type=float, default=None, help="pass threshold on the worst margin (default: per check)")
    p.add_argument("--budget", type=float, default=d.budget, help="truncation budget for lost population")
    p.add_argument("--threads", default="1", help="worker threads or 'auto'; BCL_THREADS overrides")
    p.add_argument("--no-refine", action="store_true", help="skip the descent stage of the conjecture check")
    p.add_argument("--report", help="also write the JSON report to this path")
    p.add_argument("--omit-timing", action="store_true", help="report elapsed_seconds as 0 for byte-identical output")
    _format_flag(p, "json")
    return ap


def _family(a) -> channels.ChannelFamily:
    def need(name):
        v = getattr(a, name)
        if v is None:
            raise ValueError(f"--channel {a.channel} requires --{name}")
        return v

    if a.channel == "thermal":
        return channels.Thermal(need("eta"), a.N)
    if a.channel == "addnoise":
        return channels.AdditiveNoise(need("n"))
    if a.channel == "amp":
        return channels.Amplifier(need("kappa"), a.N)
    return channels.ContraAmplifier(need("kappa"), a.N)


def _num(v: float) -> str:
    return capacity.format_number(v)


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        for k, v in payload.items():
            out.write(f"{k}: {_num(v) if isinstance(v, float) else v}\n")


def _family_dict(f) -> dict:
    return {"channel": type(f).__name__, **dataclasses.asdict(f)}


def cmd_capacity(a, out) -> int:
    fam = _family(a)
    r = capacity.classical_capacity(fam, a.energy)
    _emit({**_family_dict(fam), "energy_E": float(a.energy), "capacity_bits": r.capacity_bits,
           "min_output_entropy_bits": r.min_output_entropy_bits,
           "max_output_entropy_bits": r.max_output_entropy_bits}, a.format, out)
    return EXIT_OK


def cmd_decompose(a, out) -> int:
    fam = _family(a)
    params = channels.canonical_params(fam)
    dec = channels.decompose(params)
    _emit({**_family_dict(fam), "tau": float(params.tau), "y": float(params.y),
           "eta0": float(dec.eta0), "kappa0": float(dec.kappa0), "conjugating": dec.conjugating}, a.format, out)
    return EXIT_OK


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bcl-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_plot(a, out) -> int:
    rows = capacity.plot_data(a.panel, capacity.GridConfig(points=a.points))
    text = capacity.to_csv(rows)
    if a.out:
        write_atomic(a.out, text)
    else:
        out.write(text)
    return EXIT_OK


def _threads(value: str) -> int:
    value = os.environ.get("BCL_THREADS", value)
    if value == "auto":
        return os.cpu_count() or 1
    n = int(value)
    if n < 1:
        raise ValueError("--threads must be >= 1")
    return n


_DIM_FIELDS = ("conjecture_dim", "transposition_dim", "spectra_dim", "chain_dim", "additivity_dim", "eof_dim")
_SAMPLE_FIELDS = ("conjecture_samples", "spectra_samples", "relent_samples", "chain_samples", "additivity_samples")


def suite_config(a) -> verification.SuiteConfig:
    cfg = verification.SuiteConfig(master_seed=a.seed, tolerance=a.tolerance, budget=a.budget,
                                   threads=_threads(a.threads), refine=not a.no_refine, eof_N=a.N)
    if a.kappa is not None:
        cfg = dataclasses.replace(cfg, kappa=a.kappa, transposition_kappa0=a.kappa, eof_kappa=a.kappa)
    if a.dim is not None:
        cfg = dataclasses.replace(cfg, **{f: a.dim for f in _DIM_FIELDS})
    if a.samples is not None:
        cfg = dataclasses.replace(cfg, **{f: a.samples for f in _SAMPLE_FIELDS})
    return cfg


def cmd_verify(a, out) -> int:
    cfg = suite_config(a)
    if a.suite == "all":
        reports = verification.run_all(cfg)
    else:
        reports = [verification.run_one(a.suite, cfg, seed=a.seed)]
    timing = not a.omit_timing
    payload = [r.to_json(timing) for r in reports]
    if a.format == "json":
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n"
    else:
        text = "".join(
            f"{'PASS' if r.passed else 'FAIL'} {r.test_name} worst_margin={_num(r.worst_margin)} "
            f"tolerance={_num(r.tolerance)} samples={r.samples}\n"
            for r in reports
        )
    out.write(text)
    if a.report:
        write_atomic(a.report, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


COMMANDS = {"capacity": cmd_capacity, "decompose": cmd_decompose, "plot": cmd_plot, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except TruncationBudgetExceeded as e:
        print(f"bcl: numerical failure: {e}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (BclError, ValueError, TypeError, OSError) as e:
        print(f"bcl: error: {e}", file=sys.stderr)
        return EXIT_INVALID


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Invoke the CLI in-process and capture stdout."""
    buf = io.StringIO()
    try:
        code = main(argv, buf)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_INVALID
    return code, buf.getvalue()
