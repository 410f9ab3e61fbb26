"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both modules directly.  The end-to-end timing runs a
classification in a subprocess per backend (``SOLVSPH_PURE_PYTHON=1`` forces
the fallback).
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from solvsph import _kernels_py
from solvsph.enumerate import _pair_tables
from solvsph.rootsys import build_root_system

try:
    from solvsph import _kernels
except ImportError:
    _kernels = None


def random_matrices(count, size, seed=0):
    rng = random.Random(seed)
    return [[[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)] for _ in range(count)]


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    print(f"  {label:<10} {best * 1e3:9.2f} ms")
    return best


def compare(title, call, repeat):
    print(title)
    slow = bench("python", lambda: call(_kernels_py), repeat)
    if _kernels is not None:
        fast = bench("cython", lambda: call(_kernels), repeat)
        print(f"  speedup    {slow / fast:9.2f}x")


def end_to_end(system, repeat):
    print(f"classify --system {system} (end to end, best of {repeat})")
    code = ("import timeit; from solvsph.cli import run; import io;"
            f"print(min(timeit.repeat(lambda: run(['classify','--system','{system}'], io.StringIO()),"
            f" number=1, repeat={repeat})))")
    for backend, flag in (("python", "1"), ("cython", "0")):
        if backend == "cython" and _kernels is None:
            continue
        env = dict(os.environ, SOLVSPH_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True)
        print(f"  {backend:<10} {float(out.stdout) * 1e3:9.2f} ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; timing the fallback only")

    for size in (12, 24, 36):
        mats = random_matrices(20, size)
        compare(f"echelon_int, 20 random {size}x{size} integer matrices",
                lambda mod: [mod.echelon_int(m, size) for m in mats], args.repeat)

    for label in ("B4", "D4", "F4"):
        _, compat, _, supports = _pair_tables(build_root_system(label))
        compare(f"compatible_subsets, {label} ({len(compat)} marked pairs)",
                lambda mod: mod.compatible_subsets(compat, supports), args.repeat)

    end_to_end("B3", max(1, args.repeat // 2))


if __name__ == "__main__":
    main()
