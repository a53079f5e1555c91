"""
Benchmark Runner Script

Discovers and executes the timing scripts in `spex/benchmarks`. Two modes:

1. Run every script matching `benchmark_*.py`.
2. Run one script with `--run NAME`.

Each benchmark module defines a top-level `run()` that logs its own timings.

Usage:
    python -m spex.benchmark_runner                          # all benchmarks
    python -m spex.benchmark_runner --run benchmark_solver   # one benchmark
"""

import argparse
import importlib.util
import logging
import pathlib
import sys

log = logging.getLogger(__name__)

# Resolve relative to this file so the runner works from any working directory
SCRIPT_DIR = pathlib.Path(__file__).resolve().parent
BENCHMARK_DIR = SCRIPT_DIR / "benchmarks"


def load_and_run(file: pathlib.Path) -> bool:
    """
    Load a benchmark file and call its `run()`.

    Args:
        file (pathlib.Path): Path to the benchmark module.

    Returns:
        bool: True when `run()` completed without raising.
    """
    module_name = f"spex.benchmarks.{file.stem}"
    spec = importlib.util.spec_from_file_location(module_name, file.resolve())
    if spec is None:
        log.error("could not load spec for %s", file.stem)
        return False

    module = importlib.util.module_from_spec(spec)
    try:
        spec.loader.exec_module(module)
        if not callable(getattr(module, "run", None)):
            log.error("%s has no callable run()", file.stem)
            return False
        log.info("running %s.run()", file.stem)
        module.run()
        return True
    except Exception:
        log.exception("benchmark %s failed", file.stem)
        return False


def load_and_run_all() -> bool:
    """Run every benchmark; True when all of them completed."""
    results = [load_and_run(file) for file in sorted(BENCHMARK_DIR.glob("benchmark_*.py"))]
    return all(results)


def load_and_run_selected(name: str) -> bool:
    """
    Run one benchmark by module name.

    Args:
        name (str): Module name without `.py`, e.g. 'benchmark_solver'.
    """
    target_file = BENCHMARK_DIR / f"{name}.py"
    if not target_file.exists():
        log.error("benchmark script '%s.py' not found in %s", name, BENCHMARK_DIR)
        return False
    return load_and_run(target_file)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Run one or all benchmark scripts.")
    parser.add_argument(
        "--run",
        metavar="BENCHMARK_NAME",
        help="Name of the benchmark to run (without .py). Example: benchmark_girth_sweep",
    )
    args = parser.parse_args(argv)
    ok = load_and_run_selected(args.run) if args.run else load_and_run_all()
    return 0 if ok else 1


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    sys.exit(main())
