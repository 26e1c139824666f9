"""Compare the compiled and pure-Python enumeration kernels.

Usage: python3 benchmarks/bench_kernels.py [max_n]

The histogram kernel is the hot loop behind the brute-force S-table and
the weighted Dyck-path oracle; enumeration feeds the bijection suite.
"""

from __future__ import annotations

import sys
import time

from treewalks._kernel import _pykernel

try:
    from treewalks._kernel import _ckernel
except ImportError:
    _ckernel = None

KERNELS = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])


def _time(fn, *args) -> float:
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def bench(label: str, fn, *args, repeats: int = 3) -> float:
    best = min(_time(fn, *args) for _ in range(repeats))
    print(f"  {label:<28} {best * 1000:10.2f} ms")
    return best


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 14
    if _ckernel is None:
        print("compiled kernel not built; benchmarking pure Python only")
    for name, kernel in KERNELS:
        print(f"{name} backend:")
        bench(f"component_histogram({max_n})", kernel.component_histogram, max_n)
        bench(f"enumerate_masks({max_n - 1})", kernel.enumerate_masks, max_n - 1)
    if _ckernel is not None:
        t_py = min(
            _time(_pykernel.component_histogram, max_n) for _ in range(3)
        )
        t_cy = min(_time(_ckernel.component_histogram, max_n) for _ in range(3))
        print(f"histogram speedup (cython vs python): {t_py / t_cy:.1f}x")
        assert _pykernel.component_histogram(max_n) == _ckernel.component_histogram(max_n)


if __name__ == "__main__":
    main()
