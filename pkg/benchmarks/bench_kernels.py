"""Compare the compiled and pure-Python brute-force kernels.

    python3 benchmarks/bench_kernels.py [--n-max 6] [--repeat 3]
"""
import argparse
import timeit

from treebij import _pykernels

try:
    from treebij import _ckernels
except ImportError:
    _ckernels = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
    print(f"{'kernel':<20}{'n':>3}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name in ("tally_functions", "tally_triply_rooted"):
        for n in range(3, args.n_max + 1):
            py = min(timeit.repeat(lambda: getattr(_pykernels, name)(n), number=1, repeat=args.repeat))
            if _ckernels is None:
                print(f"{name:<20}{n:>3}{py:>12.4f}{'-':>12}{'-':>10}")
                continue
            assert getattr(_ckernels, name)(n) == getattr(_pykernels, name)(n)
            cy = min(timeit.repeat(lambda: getattr(_ckernels, name)(n), number=1, repeat=args.repeat))
            print(f"{name:<20}{n:>3}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
