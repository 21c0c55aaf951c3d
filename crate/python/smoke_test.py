#!/usr/bin/env python3
"""Smoke test for the resint_py extension module.

Builds nothing itself: run `cargo build -p resint-py` first (or pass
--release and build in release mode). The script locates the cdylib in the
cargo target directory, stages it under an importable name, and checks the
worked example plus the set-level analytics end to end.
"""

import argparse
import math
import shutil
import sys
import tempfile
from pathlib import Path


def locate_cdylib(repo_root: Path, profile: str) -> Path:
    candidates = [
        repo_root / "target" / profile / "libresint_py.so",
        repo_root / "target" / profile / "libresint_py.dylib",
        repo_root / "target" / profile / "resint_py.dll",
    ]
    for path in candidates:
        if path.exists():
            return path
    raise SystemExit(
        f"extension not found under target/{profile}/ - run `cargo build -p resint-py` first"
    )


def stage_module(cdylib: Path, stage_dir: Path) -> None:
    suffix = ".pyd" if cdylib.suffix == ".dll" else ".so"
    shutil.copy2(cdylib, stage_dir / f"resint_py{suffix}")
    sys.path.insert(0, str(stage_dir))


def approx(got: float, want: float, tol: float, what: str) -> None:
    if math.isnan(got) or abs(got - want) > tol:
        raise SystemExit(f"FAIL {what}: got {got}, want {want} +- {tol}")
    print(f"ok {what}: {got}")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--release", action="store_true", help="use target/release")
    args = parser.parse_args()
    profile = "release" if args.release else "debug"

    repo_root = Path(__file__).resolve().parent.parent
    cdylib = locate_cdylib(repo_root, profile)
    with tempfile.TemporaryDirectory() as stage:
        stage_module(cdylib, Path(stage))
        import resint_py

        # worked example: t_a = 20, R = 108 CTT
        op = resint_py.SimpleOperation(-2.0, 3.0, 2.0, 8.0)
        assert op.re_value == 2.0, "sign normalization"
        approx(op.actual_completion(), 20.0, 0.0, "actual_completion")
        approx(op.resource_intensity(), 108.0, 0.0, "resource_intensity")
        approx(op.bd_height(), 36.0, 0.0, "bd_height")
        approx(op.numeric_resource_intensity(step=1e-3), 108.0, 0.5, "numeric R")
        approx(op.numeric_actual_completion(step=1e-3), 20.0, 5e-3, "numeric t_a")

        series = op.thread_series(step=1e-2)
        assert series["dif"][0] == 0.0, "dif starts at zero"
        approx(series["r"][-1], 108.0, 0.5, "thread series endpoint")

        # time sweep reproduces the quadratic R column
        base = resint_py.SimpleOperation(2.0, 3.0)
        ops = resint_py.generate_sweep(base, "time", 1.0, 1.0, 7)
        r_column = [round(o.resource_intensity(), 2) for o in ops]
        expected = [3.0, 12.0, 27.0, 48.0, 75.0, 108.0, 147.0]
        if r_column != expected:
            raise SystemExit(f"FAIL sweep column: {r_column} != {expected}")
        print(f"ok sweep column: {r_column}")

        # minimum R marks the maximum profit, not the minimum cost
        cycle = [
            (2.0, 1.0), (1.894, 1.05), (1.824, 1.1), (1.772, 1.15),
            (1.75, 1.2), (1.738, 1.25), (1.759, 1.3), (1.791, 1.35),
            (1.837, 1.4), (1.913, 1.45), (2.0, 1.5),
        ]
        ops = [resint_py.SimpleOperation(re, 2.5, 0.0, t) for re, t in cycle]
        report = resint_py.evaluate_set(ops, horizon=1150.0)
        assert report["argmin_cost"] == 5, report
        assert report["argmin_r"] == 3, report
        assert report["argmax_profit"] == 3, report
        approx(report["rows"][3]["prof"], 728.0, 1e-9, "profit of min-R row")
        approx(report["mirror_rank_stat"], -21.0 / 22.0, 1e-12, "mirror rank stat")

        # distributed signals from raw samples
        step = 1e-3
        n = int(10.0 / step)
        re_values = [1.0 if i * step < 2.0 else 0.0 for i in range(n)]
        pe_values = [1.5 if 6.0 <= i * step < 8.0 else 0.0 for i in range(n)]
        metrics = resint_py.signal_metrics(0.0, step, re_values, pe_values)
        approx(metrics["t_a"], 19.0, 2e-3, "distributed t_a")
        approx(metrics["r_numeric"], 647.0 / 6.0, 0.05, "distributed R")

        # errors surface as exceptions
        try:
            resint_py.SimpleOperation(3.0, 2.0, 0.0, 1.0).resource_intensity()
        except RuntimeError as exc:
            print(f"ok non-effective operation raises: {exc}")
        else:
            raise SystemExit("FAIL: non-effective operation did not raise")

    print("smoke test: PASS")


if __name__ == "__main__":
    main()
