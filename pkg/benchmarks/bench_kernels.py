#!/usr/bin/env python3
"""Benchmark the compiled scalar kernels against the pure-Python fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--reps N]

Times the three hot kernels (signed log-Gamma, Gamma ratio, power-term
evaluation) plus an end-to-end library pipeline on each importable backend,
and prints the speedup of the compiled extension.
"""

import argparse
import random
import time

from fraclift._kernels import available_backends


def _timeit(fn, reps):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        fn(reps)
        best = min(best, time.perf_counter() - t0)
    return reps / best


def bench_backend(mod, reps, data):
    xs, pairs, exps, coefs, dxs = data
    out = {}

    def loggamma(n):
        f = mod.signed_loggamma
        for i in range(n):
            f(xs[i % len(xs)], 1e-9)

    def ratio(n):
        f = mod.gamma_ratio
        for i in range(n):
            p, q = pairs[i % len(pairs)]
            f(p, q, 1e-9)

    def evalterms(n):
        f = mod.eval_terms
        for i in range(n):
            f(dxs[i % len(dxs)], exps, coefs)

    out["signed_loggamma"] = _timeit(loggamma, reps)
    out["gamma_ratio"] = _timeit(ratio, reps)
    out["eval_terms(24)"] = _timeit(evalterms, max(1, reps // 10))
    return out


def bench_pipeline(reps):
    # end-to-end: expand, lift, shift, project, differintegrate, evaluate
    from fraclift import lift_jet, project, rl_series, series_eval, shift, to_series
    from fraclift.lifted import embed

    f = to_series("exp(x)", 0, 24)

    def run(n):
        for _ in range(n):
            g = rl_series(f, 0.5)
            h = project(shift(embed(lift_jet(f)), 0.5))
            series_eval(g, 0.5)
            series_eval(h, 0.5)

    return _timeit(run, max(1, reps // 200))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=200000)
    args = ap.parse_args()

    rng = random.Random(0)
    xs = [rng.uniform(-60.0, 60.0) for _ in range(1024)]
    pairs = [(rng.uniform(-30.0, 30.0), rng.uniform(-30.0, 30.0))
             for _ in range(1024)]
    exps = sorted(rng.uniform(0.0, 12.0) for _ in range(24))
    coefs = [rng.uniform(-5.0, 5.0) for _ in range(24)]
    dxs = [rng.uniform(0.01, 3.0) for _ in range(1024)]
    data = (xs, pairs, exps, coefs, dxs)

    backends = available_backends()
    results = {name: bench_backend(mod, args.reps, data)
               for name, mod in backends.items()}

    names = sorted({k for r in results.values() for k in r})
    print("%-20s" % "kernel", end="")
    for b in results:
        print("%14s" % (b + " ops/s"), end="")
    if "c" in results and "python" in results:
        print("%10s" % "speedup")
    else:
        print()
    for n in names:
        print("%-20s" % n, end="")
        for b in results:
            print("%14.3g" % results[b][n], end="")
        if "c" in results and "python" in results:
            print("%9.1fx" % (results["c"][n] / results["python"][n]))
        else:
            print()

    print("\npipeline (active backend: %s): %.3g pipelines/s"
          % (__import__("fraclift").KERNEL_BACKEND, bench_pipeline(args.reps)))


if __name__ == "__main__":
    main()
