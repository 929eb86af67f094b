"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 10 12 14 16] [--repeat 3]

Each row times one enumeration on the same seeded framework with both
backends and checks that they return identical results.
"""

import argparse
import statistics
import time

from sbaf import af, coherence, kernels, language, verify


def workloads(sb):
    return {
        "admissible": lambda: af.enumerate_masks_tagged("admissible", sb, None),
        "preferred": lambda: af.enumerate_masks_tagged("preferred", sb, None),
        "weakly-coherent": lambda: coherence.coherent_masks("weak", sb, None),
        "strongly-adequate": lambda: language.adequate_masks("strong", sb, None),
        "weakly-adequate": lambda: language.adequate_masks("weak", sb, None),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14, 16])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=7)
    ns = p.parse_args(argv)
    if not kernels.compiled_available():
        print("compiled kernels are not built; only the Python fallback is available")
        return 1
    print(f"{'args':>4} {'sents':>5} {'workload':<18} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    speedups = []
    for n in ns.sizes:
        cfg = verify.GenConfig(seed=ns.seed, min_args=n, max_args=n, sentences=n, density=0.04, naming=0.1)
        sb = verify.gen_sbaf(cfg)
        for name, fn in workloads(sb).items():
            if name.endswith("adequate") and len(sb.universe) > 16:
                continue
            with kernels.forced_python():
                t_py, out_py = best_of(fn, ns.repeat)
            t_c, out_c = best_of(fn, ns.repeat)
            assert out_py == out_c, f"backends disagree on {name} with {n} arguments"
            speedups.append(t_py / t_c if t_c else float("inf"))
            print(f"{n:>4} {len(sb.universe):>5} {name:<18} {t_py * 1e3:>10.2f} {t_c * 1e3:>10.2f} {speedups[-1]:>7.1f}x")
    print(f"median speedup {statistics.median(speedups):.1f}x over {len(speedups)} runs")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
