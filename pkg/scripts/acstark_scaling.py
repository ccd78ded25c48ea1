#!/usr/bin/env python3
"""Light-coupling identifier data: time sweeps plus the short-time scan.

Produces the time dependence for N = 2..7 (one file) and the single-point
t = 2.5/N scan for N = 2..20 (another file).  Pass ``--full`` to push the
short-time scan to N = 40; that run takes minutes.
"""

import pathlib
import sys

from boswit.sweep import SweepConfig, default_grid, rows_to_csv, run_acstark


def main() -> None:
    args = [a for a in sys.argv[1:] if a != "--full"]
    full = "--full" in sys.argv[1:]
    out_dir = pathlib.Path(args[0]) if args else pathlib.Path("data")
    out_dir.mkdir(parents=True, exist_ok=True)

    sweep = SweepConfig("acstark", tuple(range(2, 8)), grid=default_grid("acstark"), jobs=2)
    path = out_dir / "acstark_time_sweep.csv"
    path.write_text(rows_to_csv(run_acstark(sweep)), encoding="utf-8")
    print(f"wrote {path}")

    n_top = 40 if full else 20
    short = SweepConfig(
        "acstark", tuple(range(2, n_top + 1)), t_over_n=2.5, jobs=2, allow_large=full
    )
    path = out_dir / "acstark_short_time.csv"
    path.write_text(rows_to_csv(run_acstark(short)), encoding="utf-8")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
