"""Compare the compiled arithmetic kernels against the pure-Python fallback.

Run as:  python3 benchmarks/kernel_bench.py [--size 64] [--trials 5]

Both backends expose the same eight kernels; this times the hot ones
(mul_mod, pow_mod, poly_divmod, mat_vec) on identical random inputs and
prints a CSV with the median time per call and the speedup.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from drinfeld._core import pure

try:
    from drinfeld._core import _corelib as compiled
except ImportError:
    compiled = None


def _inputs(rng: random.Random, size: int, p: int):
    a = [rng.randrange(p) for _ in range(size)]
    b = [rng.randrange(p) for _ in range(size)]
    mod = [rng.randrange(p) for _ in range(size)] + [1]
    mat = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
    vec = [rng.randrange(p) for _ in range(size)]
    return a, b, mod, mat, vec


def _cases(backend, size: int, p: int, rng: random.Random):
    a, b, mod, mat, vec = _inputs(rng, size, p)
    e = p ** size // 3 + 1
    return {
        "mul_mod": lambda: backend.mul_mod(a, b, mod, p),
        "pow_mod": lambda: backend.pow_mod(a, e, mod, p),
        "poly_divmod": lambda: backend.poly_divmod(a + b, mod, p),
        "mat_vec": lambda: backend.mat_vec(mat, vec, p),
    }


def _median_ms(fn, trials: int) -> float:
    times = []
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        times.append((time.perf_counter() - t0) * 1000.0)
    return statistics.median(times)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=64)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("kernel,backend,median_ms,speedup")
    pure_cases = _cases(pure, args.size, args.p, random.Random(args.seed))
    comp_cases = (_cases(compiled, args.size, args.p,
                         random.Random(args.seed))
                  if compiled is not None else None)
    for name, fn in pure_cases.items():
        t_pure = _median_ms(fn, args.trials)
        print(f"{name},pure,{t_pure:.4f},1.00")
        if comp_cases is not None:
            t_comp = _median_ms(comp_cases[name], args.trials)
            print(f"{name},compiled,{t_comp:.4f},{t_pure / t_comp:.2f}")
    if compiled is None:
        print("# compiled backend unavailable; showing pure backend only")


if __name__ == "__main__":
    main()
